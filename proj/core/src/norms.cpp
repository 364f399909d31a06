#include "mpns/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mpns/fft.hpp"
#include "mpns/operators.hpp"

namespace mpns {
namespace {

void require_real(const ScalarField& f, const char* what) {
    if (!f.is_real()) throw std::logic_error(std::string(what) + ": expected real samples");
}

void require_spectral(const ScalarField& f, const char* what) {
    if (!f.is_spectral())
        throw std::logic_error(std::string(what) + ": expected spectral representation");
}

double lp_of_samples(std::span<const double> s, double cell, double p) {
    if (std::isinf(p)) {
        double best = 0.0;
        for (double v : s) best = std::max(best, std::abs(v));
        return best;
    }
    double acc = 0.0;
    if (p == 2.0) {
        for (double v : s) acc += v * v;
    } else {
        for (double v : s) acc += std::pow(std::abs(v), p);
    }
    return std::pow(acc * cell, 1.0 / p);
}

double weak_lp_of_samples(std::span<const double> s, double cell, double p) {
    std::vector<double> mags(s.size());
    for (size_t i = 0; i < s.size(); ++i) mags[i] = std::abs(s[i]);
    std::sort(mags.begin(), mags.end(), std::greater<double>());
    // measure{|f| >= a_i} = (i+1) * cell for the last index of each tie run;
    // taking the max over all i realizes the exact discrete supremum.
    double best = 0.0;
    for (size_t i = 0; i < mags.size(); ++i) {
        if (mags[i] == 0.0) break;
        best = std::max(best, mags[i] * std::pow((i + 1) * cell, 1.0 / p));
    }
    return best;
}

struct BallOffsets {
    double radius = 0.0;
    std::vector<std::array<int, 3>> cells;
};

std::vector<BallOffsets> dyadic_balls(const Grid& g, const MorreyParams& mp) {
    std::vector<BallOffsets> balls;
    const double h = g.spacing();
    for (double radius = g.box_length / 2.0; radius >= mp.min_radius_cells * h - 1e-12 * h;
         radius /= 2.0) {
        BallOffsets b;
        b.radius = radius;
        const double r2 = radius * radius;
        for (int dz = 0; dz < g.n; ++dz) {
            const int wz = std::min(dz, g.n - dz);
            for (int dy = 0; dy < g.n; ++dy) {
                const int wy = std::min(dy, g.n - dy);
                for (int dx = 0; dx < g.n; ++dx) {
                    const int wx = std::min(dx, g.n - dx);
                    const double d2 =
                        (static_cast<double>(wx) * wx + static_cast<double>(wy) * wy +
                         static_cast<double>(wz) * wz) *
                        h * h;
                    if (d2 <= r2) b.cells.push_back({dx, dy, dz});
                }
            }
        }
        balls.push_back(std::move(b));
    }
    return balls;
}

double morrey_of_samples(const Grid& g, std::span<const double> s, double p, double q,
                         const MorreyParams& mp) {
    if (!(p > 1.0) || p > q) throw std::invalid_argument("morrey_norm: need 1 < p <= q");
    if (mp.center_stride < 1) throw std::invalid_argument("morrey_norm: bad center stride");
    std::vector<double> pw(s.size());
    for (size_t i = 0; i < s.size(); ++i) pw[i] = std::pow(std::abs(s[i]), p);

    const double cell = g.cell_volume();
    const double expo = 3.0 / q - 3.0 / p;
    const auto balls = dyadic_balls(g, mp);
    double best = 0.0;
    for (const auto& ball : balls) {
        const double rfac = std::pow(ball.radius, expo);
        for (int cz = 0; cz < g.n; cz += mp.center_stride)
            for (int cy = 0; cy < g.n; cy += mp.center_stride)
                for (int cx = 0; cx < g.n; cx += mp.center_stride) {
                    double acc = 0.0;
                    for (const auto& d : ball.cells) {
                        int x = cx + d[0];
                        if (x >= g.n) x -= g.n;
                        int y = cy + d[1];
                        if (y >= g.n) y -= g.n;
                        int z = cz + d[2];
                        if (z >= g.n) z -= g.n;
                        acc += pw[(static_cast<long>(z) * g.n + y) * g.n + x];
                    }
                    best = std::max(best, rfac * std::pow(acc * cell, 1.0 / p));
                }
    }
    return best;
}

}  // namespace

double lp_norm(const ScalarField& f, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    require_real(f, "lp_norm");
    return lp_of_samples(f.samples(), f.grid().cell_volume(), p);
}

double lp_norm(const VectorField& f, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    ScalarField mag = magnitude(f);
    return lp_of_samples(mag.samples(), f.grid().cell_volume(), p);
}

double weak_lp_norm(const ScalarField& f, double p) {
    if (!(p > 1.0)) throw std::invalid_argument("weak_lp_norm: p must exceed 1");
    require_real(f, "weak_lp_norm");
    return weak_lp_of_samples(f.samples(), f.grid().cell_volume(), p);
}

double weak_lp_norm(const VectorField& f, double p) {
    if (!(p > 1.0)) throw std::invalid_argument("weak_lp_norm: p must exceed 1");
    ScalarField mag = magnitude(f);
    return weak_lp_of_samples(mag.samples(), f.grid().cell_volume(), p);
}

double sobolev_hdot_norm(const ScalarField& f, double r) {
    if (!(r >= 0.0 && r < 1.5))
        throw std::invalid_argument("sobolev_hdot_norm: r must be in [0, 3/2)");
    require_spectral(f, "sobolev_hdot_norm");
    const Grid& g = f.grid();
    auto m = f.modes();
    const double s = g.wave_scale();
    double acc = 0.0;
    for (int jz = 0; jz < g.n; ++jz) {
        const double kz = s * g.mode(jz);
        for (int jy = 0; jy < g.n; ++jy) {
            const double ky = s * g.mode(jy);
            for (int jx = 0; jx < g.n; ++jx) {
                const double kx = s * g.mode(jx);
                const double k2 = kx * kx + ky * ky + kz * kz;
                if (k2 == 0.0) continue;
                acc += std::pow(k2, r) * std::norm(m[g.index(jx, jy, jz)]);
            }
        }
    }
    return std::sqrt(g.volume() * acc);
}

double sobolev_hdot_norm(const VectorField& f, double r) {
    const double a = sobolev_hdot_norm(f[0], r);
    const double b = sobolev_hdot_norm(f[1], r);
    const double c = sobolev_hdot_norm(f[2], r);
    return std::sqrt(a * a + b * b + c * c);
}

double besov_b21r_norm(const ScalarField& f, double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("besov_b21r_norm: r must be in (0, 1)");
    require_spectral(f, "besov_b21r_norm");
    const Grid& g = f.grid();
    auto m = f.modes();
    const double s = g.wave_scale();
    // annulus j holds 2^j <= |k| < 2^{j+1}; offset so indices stay positive
    constexpr int kOffset = 64;
    std::vector<double> block2(2 * kOffset, 0.0);
    for (int jz = 0; jz < g.n; ++jz) {
        const double kz = s * g.mode(jz);
        for (int jy = 0; jy < g.n; ++jy) {
            const double ky = s * g.mode(jy);
            for (int jx = 0; jx < g.n; ++jx) {
                const double kx = s * g.mode(jx);
                const double k2 = kx * kx + ky * ky + kz * kz;
                if (k2 == 0.0) continue;
                const double e2 = std::norm(m[g.index(jx, jy, jz)]);
                if (e2 == 0.0) continue;
                const int j = static_cast<int>(std::floor(0.5 * std::log2(k2)));
                block2[j + kOffset] += e2;
            }
        }
    }
    double acc = 0.0;
    for (size_t b = 0; b < block2.size(); ++b) {
        if (block2[b] == 0.0) continue;
        const int j = static_cast<int>(b) - kOffset;
        acc += std::pow(2.0, j * r) * std::sqrt(g.volume() * block2[b]);
    }
    return acc;
}

double besov_b21r_norm(const VectorField& f, double r) {
    const double a = besov_b21r_norm(f[0], r);
    const double b = besov_b21r_norm(f[1], r);
    const double c = besov_b21r_norm(f[2], r);
    return std::sqrt(a * a + b * b + c * c);
}

double morrey_norm(const ScalarField& f, double p, double q, const MorreyParams& mp) {
    require_real(f, "morrey_norm");
    return morrey_of_samples(f.grid(), f.samples(), p, q, mp);
}

double morrey_norm(const VectorField& f, double p, double q, const MorreyParams& mp) {
    ScalarField mag = magnitude(f);
    return morrey_of_samples(f.grid(), mag.samples(), p, q, mp);
}

double xr_lower_bound(const ScalarField& f, double r, int trials) {
    if (!(r >= 0.0 && r < 1.5))
        throw std::invalid_argument("xr_lower_bound: r must be in [0, 3/2)");
    if (trials < 1) throw std::invalid_argument("xr_lower_bound: empty trial family");
    const ScalarField fr = as_real(f);
    const Grid& g = fr.grid();
    auto fs = fr.samples();
    const double h = g.spacing();

    auto ratio_for = [&](const std::vector<double>& trial) {
        double mean = 0.0;
        for (double v : trial) mean += v;
        mean /= static_cast<double>(trial.size());
        std::vector<double> prod(trial.size());
        std::vector<double> centered(trial.size());
        for (size_t i = 0; i < trial.size(); ++i) {
            centered[i] = trial[i] - mean;
            prod[i] = fs[i] * centered[i];
        }
        const double num = lp_of_samples(prod, g.cell_volume(), 2.0);
        const double den = sobolev_hdot_norm(
            to_spectral(ScalarField::from_samples(g, std::move(centered))), r);
        return den > 0.0 ? num / den : 0.0;
    };

    double best = 0.0;

    // single-mode waves
    static constexpr std::array<std::array<int, 3>, 12> kWaves{{{1, 0, 0},
                                                                {0, 1, 0},
                                                                {0, 0, 1},
                                                                {1, 1, 0},
                                                                {1, 0, 1},
                                                                {0, 1, 1},
                                                                {1, 1, 1},
                                                                {2, 0, 0},
                                                                {0, 2, 0},
                                                                {0, 0, 2},
                                                                {2, 1, 0},
                                                                {1, 2, 1}}};
    const int nwaves = std::min<int>(trials, kWaves.size());
    const double s = g.wave_scale();
    for (int w = 0; w < nwaves; ++w) {
        std::vector<double> trial(fs.size());
        for (int z = 0; z < g.n; ++z)
            for (int y = 0; y < g.n; ++y)
                for (int x = 0; x < g.n; ++x)
                    trial[g.index(x, y, z)] =
                        std::cos(s * (kWaves[w][0] * x + kWaves[w][1] * y + kWaves[w][2] * z) * h);
        best = std::max(best, ratio_for(trial));
    }

    // periodized Gaussian bumps at golden-ratio scattered centers
    std::vector<double> widths;
    for (double sigma = g.box_length / 4.0; sigma >= 2.0 * h; sigma /= 2.0)
        widths.push_back(sigma);
    if (widths.empty()) widths.push_back(g.box_length / 4.0);
    for (int t = 0; t < trials; ++t) {
        const double sigma = widths[t % widths.size()];
        auto frac = [](double v) { return v - std::floor(v); };
        const int cx = static_cast<int>(g.n * frac(0.6180339887498949 * (t + 1)));
        const int cy = static_cast<int>(g.n * frac(0.7548776662466927 * (t + 1)));
        const int cz = static_cast<int>(g.n * frac(0.8191725133961645 * (t + 1)));
        std::vector<double> trial(fs.size());
        for (int z = 0; z < g.n; ++z)
            for (int y = 0; y < g.n; ++y)
                for (int x = 0; x < g.n; ++x) {
                    int dx = std::abs(x - cx);
                    int dy = std::abs(y - cy);
                    int dz = std::abs(z - cz);
                    dx = std::min(dx, g.n - dx);
                    dy = std::min(dy, g.n - dy);
                    dz = std::min(dz, g.n - dz);
                    const double d2 = (static_cast<double>(dx) * dx +
                                       static_cast<double>(dy) * dy +
                                       static_cast<double>(dz) * dz) *
                                      h * h;
                    trial[g.index(x, y, z)] = std::exp(-d2 / (2.0 * sigma * sigma));
                }
        best = std::max(best, ratio_for(trial));
    }
    return best;
}

ScalarField magnitude(const VectorField& v) {
    if (v.rep() != Rep::Real) throw std::logic_error("magnitude: expected real samples");
    auto a = v[0].samples();
    auto b = v[1].samples();
    auto c = v[2].samples();
    std::vector<double> out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = std::sqrt(a[i] * a[i] + b[i] * b[i] + c[i] * c[i]);
    return ScalarField::from_samples(v.grid(), std::move(out));
}

std::string norm_kind_name(NormKind k) {
    switch (k) {
        case NormKind::Lp: return "Lp";
        case NormKind::WeakLp: return "WeakLp";
        case NormKind::SobolevHdot: return "SobolevHdot";
        case NormKind::BesovB21r: return "BesovB21r";
        case NormKind::MorreyM: return "MorreyM";
        case NormKind::XrLowerBound: return "XrLowerBound";
    }
    return "unknown";
}

}  // namespace mpns
