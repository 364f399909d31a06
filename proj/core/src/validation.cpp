#include "mpns/validation.hpp"

#include <cmath>

#include "mpns/fft.hpp"
#include "mpns/generators.hpp"
#include "mpns/norms.hpp"
#include "mpns/operators.hpp"
#include "mpns/oracle/oracle.hpp"
#include "mpns/solver.hpp"

namespace mpns {
namespace {

OracleCheckResult make_result(std::string name, double err, double tol) {
    return OracleCheckResult{std::move(name), err, tol, err <= tol};
}

OracleCheckResult check_fft() {
    Grid g(8);
    const ScalarField f = to_real(random_band_limited_scalar(g, 101, 1.5, 3));
    const std::vector<double> samples(f.samples().begin(), f.samples().end());
    const auto want = oracle::naive_dft(samples, g.n);
    const auto got = to_spectral(f).modes();
    double err = 0.0, scale = 0.0;
    for (size_t i = 0; i < want.size(); ++i) {
        err = std::max(err, std::abs(got[i] - want[i]));
        scale = std::max(scale, std::abs(want[i]));
    }
    return make_result("fft_vs_naive_dft", err / scale, 1e-12);
}

OracleCheckResult check_advection() {
    Grid g(8);
    const int limit = dealias_limit(g.n, 2.0 / 3.0);
    const VectorField v = random_vector_field(g, 103, 2.0, limit, true, 1.0);
    const VectorField w = random_vector_field(g, 107, 2.0, limit, false, 1.0);
    const VectorField got = nonlinear_advection(v, w, limit);

    // oracle route: sum_j conv(v_j, i k_j w_i) on raw coefficient arrays
    const double s = g.wave_scale();
    double err = 0.0, scale = 0.0;
    for (int i = 0; i < 3; ++i) {
        std::vector<Complex> acc(static_cast<size_t>(g.size()), Complex{});
        for (int j = 0; j < 3; ++j) {
            std::vector<Complex> vm(v[j].modes().begin(), v[j].modes().end());
            std::vector<Complex> dw(w[i].modes().begin(), w[i].modes().end());
            for (int jz = 0; jz < g.n; ++jz)
                for (int jy = 0; jy < g.n; ++jy)
                    for (int jx = 0; jx < g.n; ++jx) {
                        const int m = j == 0 ? g.mode(jx) : j == 1 ? g.mode(jy) : g.mode(jz);
                        dw[g.index(jx, jy, jz)] *= Complex{0.0, s * m};
                    }
            const auto conv = oracle::direct_convolution(vm, dw, g.n);
            for (size_t idx = 0; idx < acc.size(); ++idx) acc[idx] += conv[idx];
        }
        auto gm = got[i].modes();
        for (int jz = 0; jz < g.n; ++jz)
            for (int jy = 0; jy < g.n; ++jy)
                for (int jx = 0; jx < g.n; ++jx) {
                    const long idx = g.index(jx, jy, jz);
                    const bool kept = std::abs(g.mode(jx)) <= limit &&
                                      std::abs(g.mode(jy)) <= limit &&
                                      std::abs(g.mode(jz)) <= limit;
                    const Complex want = kept ? acc[idx] : Complex{};
                    err = std::max(err, std::abs(gm[idx] - want));
                    scale = std::max(scale, std::abs(want));
                }
    }
    return make_result("advection_vs_direct_convolution", err / scale, 1e-12);
}

OracleCheckResult check_morrey() {
    Grid g(16);
    const ScalarField f = to_real(random_band_limited_scalar(g, 109, 2.0, 5));
    const MorreyParams mp{4, 2};
    const double got = morrey_norm(f, 2.0, 6.0, mp);
    const std::vector<double> samples(f.samples().begin(), f.samples().end());
    double best = 0.0;
    for (double radius = g.box_length / 2.0;
         radius >= mp.min_radius_cells * g.spacing() - 1e-12; radius /= 2.0)
        for (int cz = 0; cz < g.n; cz += mp.center_stride)
            for (int cy = 0; cy < g.n; cy += mp.center_stride)
                for (int cx = 0; cx < g.n; cx += mp.center_stride) {
                    const double v = oracle::direct_ball_integral(
                        samples, g.n, g.box_length, {cx, cy, cz}, radius, 2.0);
                    best = std::max(best, std::pow(radius, 3.0 / 6.0 - 3.0 / 2.0) * v);
                }
    return make_result("morrey_vs_direct_ball_integral", std::abs(got - best) / best, 1e-3);
}

OracleCheckResult check_weak_lp() {
    Grid g(16);
    const ScalarField f = to_real(random_band_limited_scalar(g, 113, 2.0, 5));
    const double got = weak_lp_norm(f, 2.5);
    const std::vector<double> samples(f.samples().begin(), f.samples().end());
    const double want = oracle::dense_level_sweep(samples, g.n, g.box_length, 2.5, 10000);
    return make_result("weak_lp_vs_dense_level_sweep", std::abs(got - want) / want, 1e-3);
}

OracleCheckResult check_step() {
    const int n = 8;
    SolverConfig cfg;
    cfg.grid = Grid(n);
    cfg.dt = 2e-3;
    cfg.t_end = 1.0;
    const Grid& g = cfg.grid;
    const double amp = 1e-8;
    std::array<Complex, 6> x0{Complex{1.0, 0.5},  Complex{-0.3, 0.2}, Complex{},
                              Complex{0.4, -0.7}, Complex{0.1, 0.9},  Complex{-0.6, 0.25}};
    for (Complex& c : x0) c *= amp;

    State s;
    s.u = VectorField::spectral_zeros(g);
    s.w = VectorField::spectral_zeros(g);
    for (int comp = 0; comp < 3; ++comp) {
        std::vector<Complex> mu(static_cast<size_t>(g.size()), Complex{});
        std::vector<Complex> mw(mu);
        mu[g.index(0, 0, 1)] = x0[comp];
        mu[g.index(0, 0, n - 1)] = std::conj(x0[comp]);
        mw[g.index(0, 0, 1)] = x0[3 + comp];
        mw[g.index(0, 0, n - 1)] = std::conj(x0[3 + comp]);
        s.u[comp] = ScalarField::from_modes(g, std::move(mu));
        s.w[comp] = ScalarField::from_modes(g, std::move(mw));
    }
    const SimulationResult sim = simulate(cfg, s, {}, 1 << 30);
    if (sim.aborted) return make_result("step_vs_matrix_exponential", 1.0, 1e-8);

    const auto sys = oracle::make_linear_mode_system({0.0, 0.0, 1.0});
    const auto want = oracle::apply_matrix(oracle::matrix_exponential(sys, cfg.t_end), x0);
    double num = 0.0, den = 0.0;
    for (int comp = 0; comp < 3; ++comp) {
        const Complex gu = sim.state.u[comp].modes()[g.index(0, 0, 1)];
        const Complex gw = sim.state.w[comp].modes()[g.index(0, 0, 1)];
        num += std::norm(gu - want[comp]) + std::norm(gw - want[3 + comp]);
        den += std::norm(want[comp]) + std::norm(want[3 + comp]);
    }
    return make_result("step_vs_matrix_exponential", std::sqrt(num / den), 1e-8);
}

}  // namespace

std::vector<OracleCheckResult> run_oracle_checks() {
    return {check_fft(), check_advection(), check_morrey(), check_weak_lp(), check_step()};
}

}  // namespace mpns
