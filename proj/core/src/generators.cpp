#include "mpns/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "mpns/fft.hpp"
#include "mpns/operators.hpp"
#include "mpns/rng.hpp"
#include "mpns/snapshot.hpp"
#include "mpns/solver.hpp"

namespace mpns {
namespace {

// Fill conjugate-symmetric Gaussian coefficients over the canonical half
// lattice, |m| <= kmax per axis, k = 0 excluded.
ScalarField gaussian_modes(const Grid& g, const CounterRng& rng, uint64_t stream,
                           double slope, int kmax) {
    std::vector<Complex> modes(static_cast<size_t>(g.size()), Complex{});
    const int cap = std::min(kmax, g.n / 2 - 1);
    for (int mz = -cap; mz <= cap; ++mz)
        for (int my = -cap; my <= cap; ++my)
            for (int mx = -cap; mx <= cap; ++mx) {
                const bool canonical =
                    mz > 0 || (mz == 0 && my > 0) || (mz == 0 && my == 0 && mx > 0);
                if (!canonical) continue;
                const double mag2 = static_cast<double>(mx) * mx +
                                    static_cast<double>(my) * my +
                                    static_cast<double>(mz) * mz;
                const double envelope = std::pow(mag2, -slope / 2.0);
                const uint64_t cx = static_cast<uint64_t>(mx + 512);
                const uint64_t cy = static_cast<uint64_t>(my + 512);
                const uint64_t cz = static_cast<uint64_t>(mz + 512);
                const Complex c{rng.normal(stream, cx, cy, cz),
                                rng.normal(stream ^ 0x5851f42d4c957f2dull, cx, cy, cz)};
                const int jx = mx >= 0 ? mx : mx + g.n;
                const int jy = my >= 0 ? my : my + g.n;
                const int jz = mz >= 0 ? mz : mz + g.n;
                const int njx = -mx >= 0 ? -mx : -mx + g.n;
                const int njy = -my >= 0 ? -my : -my + g.n;
                const int njz = -mz >= 0 ? -mz : -mz + g.n;
                modes[g.index(jx, jy, jz)] = envelope * c;
                modes[g.index(njx, njy, njz)] = envelope * std::conj(c);
            }
    return ScalarField::from_modes(g, std::move(modes));
}

ScalarField scale_modes(const ScalarField& f, double factor) {
    auto m = f.modes();
    std::vector<Complex> out(m.size());
    for (size_t i = 0; i < m.size(); ++i) out[i] = factor * m[i];
    return ScalarField::from_modes(f.grid(), std::move(out));
}

VectorField scale_modes(const VectorField& v, double factor) {
    return VectorField{{scale_modes(v[0], factor), scale_modes(v[1], factor),
                        scale_modes(v[2], factor)}};
}

std::array<double, 3> unit_perp(const std::array<int, 3>& k) {
    const double kx = k[0], ky = k[1], kz = k[2];
    // cross with whichever axis is least aligned
    std::array<double, 3> a =
        std::abs(kx) <= std::abs(ky) && std::abs(kx) <= std::abs(kz)
            ? std::array<double, 3>{1.0, 0.0, 0.0}
            : (std::abs(ky) <= std::abs(kz) ? std::array<double, 3>{0.0, 1.0, 0.0}
                                            : std::array<double, 3>{0.0, 0.0, 1.0});
    std::array<double, 3> e{ky * a[2] - kz * a[1], kz * a[0] - kx * a[2],
                            kx * a[1] - ky * a[0]};
    const double norm = std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
    if (norm == 0.0) throw std::invalid_argument("SingleMode: zero wavevector");
    for (double& v : e) v /= norm;
    return e;
}

}  // namespace

GeneratorKind generator_kind_from_name(const std::string& name) {
    if (name == "taylor_green") return GeneratorKind::TaylorGreen;
    if (name == "random_div_free") return GeneratorKind::RandomDivFree;
    if (name == "single_mode") return GeneratorKind::SingleMode;
    if (name == "snapshot") return GeneratorKind::SnapshotFile;
    throw std::invalid_argument("unknown initial-data generator: " + name);
}

std::string generator_kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::TaylorGreen: return "taylor_green";
        case GeneratorKind::RandomDivFree: return "random_div_free";
        case GeneratorKind::SingleMode: return "single_mode";
        case GeneratorKind::SnapshotFile: return "snapshot";
    }
    return "unknown";
}

ScalarField random_band_limited_scalar(const Grid& grid, uint64_t seed, double slope,
                                       int kmax) {
    if (kmax < 1) throw std::invalid_argument("random_band_limited_scalar: kmax must be >= 1");
    CounterRng rng{seed};
    ScalarField f = gaussian_modes(grid, rng, 0, slope, kmax);
    const double l2 = spectral_l2(f);
    if (l2 == 0.0) throw std::invalid_argument("random_band_limited_scalar: empty band");
    return scale_modes(f, 1.0 / l2);
}

VectorField random_vector_field(const Grid& grid, uint64_t seed, double slope, int kmax,
                                bool project, double amplitude) {
    if (amplitude == 0.0) return VectorField::spectral_zeros(grid);
    CounterRng rng{seed};
    VectorField v{{gaussian_modes(grid, rng, 1, slope, kmax),
                   gaussian_modes(grid, rng, 2, slope, kmax),
                   gaussian_modes(grid, rng, 3, slope, kmax)}};
    if (project) v = leray_project(v);
    const double l2 = spectral_l2(v);
    if (l2 == 0.0) throw std::invalid_argument("random_vector_field: empty band");
    return scale_modes(v, amplitude / l2);
}

State generate_initial(const GeneratorSpec& spec, const Grid& grid, uint64_t seed) {
    State s;
    s.t = 0.0;
    switch (spec.kind) {
        case GeneratorKind::TaylorGreen: {
            const double a = spec.amplitude;
            const double sc = grid.wave_scale();
            VectorField u = sample_vector_field(
                grid,
                [=](double x, double y, double z) {
                    return a * std::sin(sc * x) * std::cos(sc * y) * std::cos(sc * z);
                },
                [=](double x, double y, double z) {
                    return -a * std::cos(sc * x) * std::sin(sc * y) * std::cos(sc * z);
                },
                [](double, double, double) { return 0.0; });
            s.u = to_spectral(u);
            s.w = VectorField::spectral_zeros(grid);
            break;
        }
        case GeneratorKind::SingleMode: {
            const auto e = unit_perp(spec.mode);
            const double sc = grid.wave_scale();
            const double a = spec.amplitude;
            const auto m = spec.mode;
            auto wave = [=](double x, double y, double z) {
                return std::cos(sc * (m[0] * x + m[1] * y + m[2] * z));
            };
            VectorField u = sample_vector_field(
                grid,
                [=](double x, double y, double z) { return a * e[0] * wave(x, y, z); },
                [=](double x, double y, double z) { return a * e[1] * wave(x, y, z); },
                [=](double x, double y, double z) { return a * e[2] * wave(x, y, z); });
            s.u = to_spectral(u);
            if (spec.omega_amplitude != 0.0) {
                const std::array<int, 3> kd{spec.mode[0], spec.mode[1], spec.mode[2]};
                std::array<double, 3> e2{
                    kd[1] * e[2] - kd[2] * e[1],
                    kd[2] * e[0] - kd[0] * e[2],
                    kd[0] * e[1] - kd[1] * e[0]};
                const double nn =
                    std::sqrt(e2[0] * e2[0] + e2[1] * e2[1] + e2[2] * e2[2]);
                for (double& v : e2) v /= nn;
                const double b = spec.omega_amplitude;
                VectorField w = sample_vector_field(
                    grid,
                    [=](double x, double y, double z) { return b * e2[0] * wave(x, y, z); },
                    [=](double x, double y, double z) { return b * e2[1] * wave(x, y, z); },
                    [=](double x, double y, double z) { return b * e2[2] * wave(x, y, z); });
                s.w = to_spectral(w);
            } else {
                s.w = VectorField::spectral_zeros(grid);
            }
            break;
        }
        case GeneratorKind::RandomDivFree: {
            const int kmax = dealias_limit(grid.n, 2.0 / 3.0);
            s.u = random_vector_field(grid, derive_seed(seed, 1), spec.slope, kmax, true,
                                      spec.amplitude);
            s.w = random_vector_field(grid, derive_seed(seed, 2), spec.slope, kmax, false,
                                      spec.omega_amplitude);
            break;
        }
        case GeneratorKind::SnapshotFile: {
            s = read_state_snapshot(spec.snapshot_path);
            break;
        }
    }
    return s;
}

}  // namespace mpns
