#pragma once

#include <cmath>
#include <vector>

#include "mpns/fft.hpp"
#include "mpns/field.hpp"
#include "mpns/generators.hpp"
#include "mpns/operators.hpp"

namespace mpns::testing {

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

inline double max_abs(const ScalarField& f) {
    double best = 0.0;
    if (f.is_real()) {
        for (double v : f.samples()) best = std::max(best, std::abs(v));
    } else {
        for (const Complex& v : f.modes()) best = std::max(best, std::abs(v));
    }
    return best;
}

inline double max_mode_diff(const ScalarField& a, const ScalarField& b) {
    auto ma = a.modes();
    auto mb = b.modes();
    double best = 0.0;
    for (size_t i = 0; i < ma.size(); ++i) best = std::max(best, std::abs(ma[i] - mb[i]));
    return best;
}

inline double max_mode_diff(const VectorField& a, const VectorField& b) {
    return std::max({max_mode_diff(a[0], b[0]), max_mode_diff(a[1], b[1]),
                     max_mode_diff(a[2], b[2])});
}

inline double max_sample_diff(const ScalarField& a, const ScalarField& b) {
    auto sa = a.samples();
    auto sb = b.samples();
    double best = 0.0;
    for (size_t i = 0; i < sa.size(); ++i) best = std::max(best, std::abs(sa[i] - sb[i]));
    return best;
}

/// Random real scalar field, zero-mean, unit L2, band-limited to the 2/3 rule.
inline ScalarField random_real_scalar(const Grid& g, uint64_t seed, double slope = 2.0) {
    return to_real(random_band_limited_scalar(g, seed, slope, dealias_limit(g.n, 2.0 / 3.0)));
}

/// Random spectral state: div-free u, unprojected w, band-limited.
inline State random_state(const Grid& g, uint64_t seed, double u_amp = 1.0,
                          double w_amp = 1.0, double slope = 2.0) {
    const int kmax = dealias_limit(g.n, 2.0 / 3.0);
    State s;
    s.u = random_vector_field(g, seed, slope, kmax, true, u_amp);
    s.w = random_vector_field(g, seed ^ 0xabcdef12345ull, slope, kmax, false, w_amp);
    s.t = 0.0;
    return s;
}

/// Cyclic shift by whole grid cells (pure sample permutation).
inline ScalarField shift_samples(const ScalarField& f, int sx, int sy, int sz) {
    const Grid& g = f.grid();
    auto s = f.samples();
    std::vector<double> out(s.size());
    const auto wrap = [&](int v) { return ((v % g.n) + g.n) % g.n; };
    for (int z = 0; z < g.n; ++z)
        for (int y = 0; y < g.n; ++y)
            for (int x = 0; x < g.n; ++x)
                out[g.index(x, y, z)] = s[g.index(wrap(x - sx), wrap(y - sy), wrap(z - sz))];
    return ScalarField::from_samples(g, std::move(out));
}

}  // namespace mpns::testing
