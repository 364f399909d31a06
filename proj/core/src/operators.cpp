#include "mpns/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace mpns {
namespace {

constexpr Complex kImag{0.0, 1.0};

void require_spectral(const ScalarField& f) {
    if (!f.is_spectral())
        throw std::logic_error("operator requires spectral representation");
}

void require_spectral(const VectorField& v) {
    if (v.rep() != Rep::Spectral)
        throw std::logic_error("operator requires spectral representation");
}

bool any_nyquist(const Grid& g, int jx, int jy, int jz) {
    return g.is_nyquist(jx) || g.is_nyquist(jy) || g.is_nyquist(jz);
}

// Applies op(modes, kx, ky, kz, idx) over the scaled lattice, writing into a
// fresh coefficient vector; modes with any index on the Nyquist plane are
// zeroed (differential operators only act below Nyquist).
template <typename Op>
std::vector<Complex> map_modes(const ScalarField& f, Op&& op) {
    const Grid& g = f.grid();
    auto m = f.modes();
    std::vector<Complex> out(m.size());
    const double s = g.wave_scale();
    for (int jz = 0; jz < g.n; ++jz) {
        const double kz = s * g.mode(jz);
        for (int jy = 0; jy < g.n; ++jy) {
            const double ky = s * g.mode(jy);
            for (int jx = 0; jx < g.n; ++jx) {
                const long i = g.index(jx, jy, jz);
                if (any_nyquist(g, jx, jy, jz)) {
                    out[i] = Complex{};
                    continue;
                }
                out[i] = op(m[i], s * g.mode(jx), ky, kz);
            }
        }
    }
    return out;
}

}  // namespace

ScalarField partial(const ScalarField& f, int axis) {
    require_spectral(f);
    if (axis < 1 || axis > 3) throw std::invalid_argument("partial: axis must be 1, 2 or 3");
    auto out = map_modes(f, [axis](Complex v, double kx, double ky, double kz) {
        const double k = axis == 1 ? kx : axis == 2 ? ky : kz;
        return kImag * k * v;
    });
    return ScalarField::from_modes(f.grid(), std::move(out));
}

VectorField partial(const VectorField& v, int axis) {
    return VectorField{{partial(v[0], axis), partial(v[1], axis), partial(v[2], axis)}};
}

ScalarField laplacian(const ScalarField& f) {
    require_spectral(f);
    auto out = map_modes(f, [](Complex v, double kx, double ky, double kz) {
        return -(kx * kx + ky * ky + kz * kz) * v;
    });
    return ScalarField::from_modes(f.grid(), std::move(out));
}

VectorField laplacian(const VectorField& v) {
    return VectorField{{laplacian(v[0]), laplacian(v[1]), laplacian(v[2])}};
}

VectorField curl(const VectorField& v) {
    require_spectral(v);
    const Grid& g = v.grid();
    auto m0 = v[0].modes();
    auto m1 = v[1].modes();
    auto m2 = v[2].modes();
    std::vector<Complex> c0(m0.size()), c1(m0.size()), c2(m0.size());
    const double s = g.wave_scale();
    for (int jz = 0; jz < g.n; ++jz) {
        const double kz = s * g.mode(jz);
        for (int jy = 0; jy < g.n; ++jy) {
            const double ky = s * g.mode(jy);
            for (int jx = 0; jx < g.n; ++jx) {
                const long i = g.index(jx, jy, jz);
                if (any_nyquist(g, jx, jy, jz)) {
                    c0[i] = c1[i] = c2[i] = Complex{};
                    continue;
                }
                const double kx = s * g.mode(jx);
                c0[i] = kImag * (ky * m2[i] - kz * m1[i]);
                c1[i] = kImag * (kz * m0[i] - kx * m2[i]);
                c2[i] = kImag * (kx * m1[i] - ky * m0[i]);
            }
        }
    }
    return VectorField{{ScalarField::from_modes(g, std::move(c0)),
                        ScalarField::from_modes(g, std::move(c1)),
                        ScalarField::from_modes(g, std::move(c2))}};
}

ScalarField divergence(const VectorField& v) {
    require_spectral(v);
    const Grid& g = v.grid();
    auto m0 = v[0].modes();
    auto m1 = v[1].modes();
    auto m2 = v[2].modes();
    std::vector<Complex> out(m0.size());
    const double s = g.wave_scale();
    for (int jz = 0; jz < g.n; ++jz) {
        const double kz = s * g.mode(jz);
        for (int jy = 0; jy < g.n; ++jy) {
            const double ky = s * g.mode(jy);
            for (int jx = 0; jx < g.n; ++jx) {
                const long i = g.index(jx, jy, jz);
                if (any_nyquist(g, jx, jy, jz)) {
                    out[i] = Complex{};
                    continue;
                }
                const double kx = s * g.mode(jx);
                out[i] = kImag * (kx * m0[i] + ky * m1[i] + kz * m2[i]);
            }
        }
    }
    return ScalarField::from_modes(g, std::move(out));
}

VectorField grad_div(const VectorField& v) {
    require_spectral(v);
    const Grid& g = v.grid();
    auto m0 = v[0].modes();
    auto m1 = v[1].modes();
    auto m2 = v[2].modes();
    std::vector<Complex> c0(m0.size()), c1(m0.size()), c2(m0.size());
    const double s = g.wave_scale();
    for (int jz = 0; jz < g.n; ++jz) {
        const double kz = s * g.mode(jz);
        for (int jy = 0; jy < g.n; ++jy) {
            const double ky = s * g.mode(jy);
            for (int jx = 0; jx < g.n; ++jx) {
                const long i = g.index(jx, jy, jz);
                if (any_nyquist(g, jx, jy, jz)) {
                    c0[i] = c1[i] = c2[i] = Complex{};
                    continue;
                }
                const double kx = s * g.mode(jx);
                const Complex kdv = kx * m0[i] + ky * m1[i] + kz * m2[i];
                c0[i] = -kx * kdv;
                c1[i] = -ky * kdv;
                c2[i] = -kz * kdv;
            }
        }
    }
    return VectorField{{ScalarField::from_modes(g, std::move(c0)),
                        ScalarField::from_modes(g, std::move(c1)),
                        ScalarField::from_modes(g, std::move(c2))}};
}

VectorField leray_project(const VectorField& v) {
    require_spectral(v);
    const Grid& g = v.grid();
    auto m0 = v[0].modes();
    auto m1 = v[1].modes();
    auto m2 = v[2].modes();
    std::vector<Complex> c0(m0.begin(), m0.end());
    std::vector<Complex> c1(m1.begin(), m1.end());
    std::vector<Complex> c2(m2.begin(), m2.end());
    for (int jz = 0; jz < g.n; ++jz) {
        const double kz = g.mode(jz);
        for (int jy = 0; jy < g.n; ++jy) {
            const double ky = g.mode(jy);
            for (int jx = 0; jx < g.n; ++jx) {
                const double kx = g.mode(jx);
                const double k2 = kx * kx + ky * ky + kz * kz;
                if (k2 == 0.0) continue;
                const long i = g.index(jx, jy, jz);
                const Complex kdv = (kx * c0[i] + ky * c1[i] + kz * c2[i]) / k2;
                c0[i] -= kx * kdv;
                c1[i] -= ky * kdv;
                c2[i] -= kz * kdv;
            }
        }
    }
    return VectorField{{ScalarField::from_modes(g, std::move(c0)),
                        ScalarField::from_modes(g, std::move(c1)),
                        ScalarField::from_modes(g, std::move(c2))}};
}

double inner_l2(const ScalarField& f, const ScalarField& g) {
    if (!(f.grid() == g.grid())) throw std::invalid_argument("inner_l2: grid mismatch");
    auto a = f.samples();
    auto b = g.samples();
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc * f.grid().cell_volume();
}

double inner_l2(const VectorField& f, const VectorField& g) {
    return inner_l2(f[0], g[0]) + inner_l2(f[1], g[1]) + inner_l2(f[2], g[2]);
}

int dealias_limit(int n, double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw std::invalid_argument("dealias fraction must be in (0, 1]");
    if (fraction >= 0.999) return n / 2;
    // 2/3 rule: largest limit with 3*limit < n, so quadratic aliases land
    // strictly outside the retained band.
    if (std::abs(fraction - 2.0 / 3.0) < 1e-9) return (n - 1) / 3;
    return static_cast<int>(std::floor(fraction * n / 2.0));
}

ScalarField truncate_modes(const ScalarField& f, int limit) {
    require_spectral(f);
    const Grid& g = f.grid();
    auto m = f.modes();
    std::vector<Complex> out(m.begin(), m.end());
    for (int jz = 0; jz < g.n; ++jz)
        for (int jy = 0; jy < g.n; ++jy)
            for (int jx = 0; jx < g.n; ++jx)
                if (std::abs(g.mode(jx)) > limit || std::abs(g.mode(jy)) > limit ||
                    std::abs(g.mode(jz)) > limit)
                    out[g.index(jx, jy, jz)] = Complex{};
    return ScalarField::from_modes(g, std::move(out));
}

VectorField truncate_modes(const VectorField& v, int limit) {
    return VectorField{{truncate_modes(v[0], limit), truncate_modes(v[1], limit),
                        truncate_modes(v[2], limit)}};
}

double relative_divergence(const VectorField& u) {
    require_spectral(u);
    const Grid& g = u.grid();
    auto m0 = u[0].modes();
    auto m1 = u[1].modes();
    auto m2 = u[2].modes();
    double div2 = 0.0, grad2 = 0.0;
    for (int jz = 0; jz < g.n; ++jz) {
        const double kz = g.mode(jz);
        for (int jy = 0; jy < g.n; ++jy) {
            const double ky = g.mode(jy);
            for (int jx = 0; jx < g.n; ++jx) {
                const double kx = g.mode(jx);
                const long i = g.index(jx, jy, jz);
                const Complex kdv = kx * m0[i] + ky * m1[i] + kz * m2[i];
                div2 += std::norm(kdv);
                grad2 += (kx * kx + ky * ky + kz * kz) *
                         (std::norm(m0[i]) + std::norm(m1[i]) + std::norm(m2[i]));
            }
        }
    }
    if (grad2 == 0.0) return 0.0;
    return std::sqrt(div2 / grad2);
}

bool has_non_finite(const ScalarField& f) {
    if (f.is_real()) {
        for (double v : f.samples())
            if (!std::isfinite(v)) return true;
    } else {
        for (const Complex& v : f.modes())
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return true;
    }
    return false;
}

bool has_non_finite(const VectorField& v) {
    return has_non_finite(v[0]) || has_non_finite(v[1]) || has_non_finite(v[2]);
}

ScalarField scaled_sum(const ScalarField& a, double ca, const ScalarField& b, double cb) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("scaled_sum: grid mismatch");
    auto ma = a.modes();
    auto mb = b.modes();
    std::vector<Complex> out(ma.size());
    for (size_t i = 0; i < ma.size(); ++i) out[i] = ca * ma[i] + cb * mb[i];
    return ScalarField::from_modes(a.grid(), std::move(out));
}

VectorField scaled_sum(const VectorField& a, double ca, const VectorField& b, double cb) {
    return VectorField{{scaled_sum(a[0], ca, b[0], cb), scaled_sum(a[1], ca, b[1], cb),
                        scaled_sum(a[2], ca, b[2], cb)}};
}

}  // namespace mpns
