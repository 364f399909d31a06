#include "mpns/solver.hpp"

#include <cmath>

#include "mpns/fft.hpp"
#include "mpns/operators.hpp"

namespace mpns {
namespace {

void require_spectral_pair(const VectorField& a, const VectorField& b, const char* what) {
    if (a.rep() != Rep::Spectral || b.rep() != Rep::Spectral)
        throw std::logic_error(std::string(what) + ": expected spectral representation");
    if (!(a.grid() == b.grid()))
        throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

// (v.grad)w with v already available as real samples and w spectral.
VectorField advect_with_real_v(const std::array<ScalarField, 3>& v_real, const VectorField& w,
                               int limit) {
    const Grid& g = w.grid();
    std::array<std::vector<double>, 3> acc;
    VectorField out;
    for (int i = 0; i < 3; ++i) {
        std::vector<double> sum(static_cast<size_t>(g.size()), 0.0);
        for (int j = 0; j < 3; ++j) {
            const ScalarField dj = to_real(partial(w[i], j + 1));
            auto dv = dj.samples();
            auto vv = v_real[j].samples();
            for (size_t idx = 0; idx < sum.size(); ++idx) sum[idx] += vv[idx] * dv[idx];
        }
        out[i] = truncate_modes(
            to_spectral(ScalarField::from_samples(g, std::move(sum))), limit);
    }
    return out;
}

struct IfFactors {
    std::vector<double> half_u;  // exp(-|k|^2 dt/2)
    double half_w_extra = 1.0;   // e^{-dt}, the -2w damping over dt/2
};

IfFactors make_factors(const Grid& g, double dt) {
    IfFactors f;
    f.half_u.resize(static_cast<size_t>(g.size()));
    f.half_w_extra = std::exp(-dt);
    const double s = g.wave_scale();
    for (int jz = 0; jz < g.n; ++jz) {
        const double kz = s * g.mode(jz);
        for (int jy = 0; jy < g.n; ++jy) {
            const double ky = s * g.mode(jy);
            for (int jx = 0; jx < g.n; ++jx) {
                const double kx = s * g.mode(jx);
                f.half_u[g.index(jx, jy, jz)] =
                    std::exp(-(kx * kx + ky * ky + kz * kz) * dt / 2.0);
            }
        }
    }
    return f;
}

// out = factor^pw * extra * a   (+ optional second operand b scaled by cb)
ScalarField damp(const ScalarField& a, const std::vector<double>& factor, int pw,
                 double extra) {
    auto m = a.modes();
    std::vector<Complex> out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        const double f = pw == 1 ? factor[i] : factor[i] * factor[i];
        out[i] = m[i] * (f * extra);
    }
    return ScalarField::from_modes(a.grid(), std::move(out));
}

VectorField damp(const VectorField& a, const std::vector<double>& factor, int pw,
                 double extra) {
    return VectorField{{damp(a[0], factor, pw, extra), damp(a[1], factor, pw, extra),
                        damp(a[2], factor, pw, extra)}};
}

struct Pair {
    VectorField u, w;
};

}  // namespace

void SolverConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("SolverConfig: dt must be positive");
    if (!(dealias > 0.0 && dealias <= 1.0))
        throw std::invalid_argument("SolverConfig: dealias fraction must be in (0, 1]");
    if (!(t_end >= 0.0)) throw std::invalid_argument("SolverConfig: t_end must be >= 0");
    if (cfl_cap && !(*cfl_cap > 0.0))
        throw std::invalid_argument("SolverConfig: cfl_cap must be positive");
    if (!(blowup_factor > 1.0))
        throw std::invalid_argument("SolverConfig: blowup_factor must exceed 1");
    Grid check(grid.n, grid.box_length);  // revalidates grid invariants
    (void)check;
}

VectorField nonlinear_advection(const VectorField& v, const VectorField& w, int limit) {
    require_spectral_pair(v, w, "nonlinear_advection");
    const VectorField vm = truncate_modes(v, limit);
    const VectorField wm = truncate_modes(w, limit);
    std::array<ScalarField, 3> v_real{to_real(vm[0]), to_real(vm[1]), to_real(vm[2])};
    return advect_with_real_v(v_real, wm, limit);
}

namespace {

// Explicit (non-stiff) part of the right-hand side; diffusion and the -2w
// damping live in the integrating factor.
Pair explicit_rhs(const VectorField& u, const VectorField& w, const SolverConfig& cfg,
                  int limit) {
    const Grid& g = u.grid();
    Pair out{VectorField::spectral_zeros(g), VectorField::spectral_zeros(g)};
    if (cfg.nonlinear) {
        std::array<ScalarField, 3> u_real{to_real(u[0]), to_real(u[1]), to_real(u[2])};
        VectorField adv_u = advect_with_real_v(u_real, u, limit);
        VectorField adv_w = advect_with_real_v(u_real, w, limit);
        out.u = scaled_sum(out.u, 1.0, adv_u, -1.0);
        out.w = scaled_sum(out.w, 1.0, adv_w, -1.0);
    }
    if (cfg.coupling) {
        out.u = scaled_sum(out.u, 1.0, curl(w), 1.0);
        out.w = scaled_sum(out.w, 1.0, curl(u), 1.0);
    }
    out.u = leray_project(out.u);
    out.w = scaled_sum(out.w, 1.0, grad_div(w), 1.0);
    return out;
}

void check_finite(const State& s, const char* when) {
    if (has_non_finite(s.u) || has_non_finite(s.w))
        throw SolverError(std::string("non-finite field ") + when);
}

}  // namespace

Rhs rhs(const State& s, const SolverConfig& cfg) {
    check_finite(s, "in rhs input");
    const int limit = dealias_limit(cfg.grid.n, cfg.dealias);
    Pair ex = explicit_rhs(s.u, s.w, cfg, limit);
    Rhs out;
    out.du = scaled_sum(ex.u, 1.0, laplacian(s.u), 1.0);
    VectorField dw = scaled_sum(ex.w, 1.0, laplacian(s.w), 1.0);
    out.domega = scaled_sum(dw, 1.0, s.w, -2.0);
    return out;
}

State step(const State& s, const SolverConfig& cfg, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
    check_finite(s, "entering step");
    const Grid& g = s.u.grid();
    if (cfg.cfl_cap) {
        double umax = 0.0;
        for (int i = 0; i < 3; ++i) {
            const ScalarField ur = to_real(s.u[i]);
            for (double v : ur.samples()) umax = std::max(umax, std::abs(v));
        }
        if (umax > 0.0 && dt > *cfg.cfl_cap * g.spacing() / umax)
            throw SolverError("CFL violation: dt exceeds cap * h / max|u|");
    }
    const int limit = dealias_limit(g.n, cfg.dealias);
    const IfFactors fac = make_factors(g, dt);
    const double hw = fac.half_w_extra;

    auto N = [&](const VectorField& u, const VectorField& w) {
        return explicit_rhs(u, w, cfg, limit);
    };

    const Pair k1 = N(s.u, s.w);
    const Pair a{damp(scaled_sum(s.u, 1.0, k1.u, dt / 2.0), fac.half_u, 1, 1.0),
                 damp(scaled_sum(s.w, 1.0, k1.w, dt / 2.0), fac.half_u, 1, hw)};
    const Pair k2 = N(a.u, a.w);
    const Pair b{scaled_sum(damp(s.u, fac.half_u, 1, 1.0), 1.0, k2.u, dt / 2.0),
                 scaled_sum(damp(s.w, fac.half_u, 1, hw), 1.0, k2.w, dt / 2.0)};
    const Pair k3 = N(b.u, b.w);
    const Pair c{scaled_sum(damp(s.u, fac.half_u, 2, 1.0), 1.0,
                            damp(k3.u, fac.half_u, 1, 1.0), dt),
                 scaled_sum(damp(s.w, fac.half_u, 2, hw * hw), 1.0,
                            damp(k3.w, fac.half_u, 1, hw), dt)};
    const Pair k4 = N(c.u, c.w);

    VectorField u_new = damp(scaled_sum(s.u, 1.0, k1.u, dt / 6.0), fac.half_u, 2, 1.0);
    u_new = scaled_sum(u_new, 1.0, damp(scaled_sum(k2.u, 1.0, k3.u, 1.0), fac.half_u, 1, 1.0),
                       dt / 3.0);
    u_new = scaled_sum(u_new, 1.0, k4.u, dt / 6.0);
    u_new = leray_project(u_new);

    VectorField w_new =
        damp(scaled_sum(s.w, 1.0, k1.w, dt / 6.0), fac.half_u, 2, hw * hw);
    w_new = scaled_sum(w_new, 1.0,
                       damp(scaled_sum(k2.w, 1.0, k3.w, 1.0), fac.half_u, 1, hw), dt / 3.0);
    w_new = scaled_sum(w_new, 1.0, k4.w, dt / 6.0);

    State out{std::move(u_new), std::move(w_new), s.t + dt};
    check_finite(out, "after step (blow-up or instability)");
    return out;
}

SimulationResult simulate(const SolverConfig& cfg, const State& initial,
                          const SampleCallback& on_sample, int cadence) {
    cfg.validate();
    if (cadence < 1) throw std::invalid_argument("simulate: cadence must be >= 1");
    const int limit = dealias_limit(cfg.grid.n, cfg.dealias);

    State state;
    state.u = leray_project(truncate_modes(as_spectral(initial.u), limit));
    state.w = truncate_modes(as_spectral(initial.w), limit);
    state.t = initial.t;
    check_finite(state, "in initial data");

    const double h1_0 = std::max(h1_norm(state.u), 1e-300);
    const long nsteps = std::max<long>(1, std::lround(cfg.t_end / cfg.dt));
    if (on_sample) on_sample(state, 0);

    for (long i = 1; i <= nsteps; ++i) {
        try {
            state = step(state, cfg, cfg.dt);
        } catch (const SolverError& e) {
            return SimulationResult{std::move(state), i - 1, true, e.what()};
        }
        state.t = initial.t + static_cast<double>(i) * cfg.dt;
        if (h1_norm(state.u) > cfg.blowup_factor * h1_0)
            return SimulationResult{std::move(state), i, true,
                                    "H1 growth beyond configured blow-up factor"};
        if (on_sample && (i % cadence == 0 || i == nsteps)) on_sample(state, i);
    }
    return SimulationResult{std::move(state), nsteps, false, {}};
}

ScalarField pressure_field(const State& s, const SolverConfig& cfg) {
    const int limit = dealias_limit(cfg.grid.n, cfg.dealias);
    const VectorField adv = nonlinear_advection(s.u, s.u, limit);
    const ScalarField d = divergence(adv);  // ik . N_hat
    const Grid& g = d.grid();
    auto m = d.modes();
    std::vector<Complex> out(m.size());
    const double sc = g.wave_scale();
    for (int jz = 0; jz < g.n; ++jz) {
        const double kz = sc * g.mode(jz);
        for (int jy = 0; jy < g.n; ++jy) {
            const double ky = sc * g.mode(jy);
            for (int jx = 0; jx < g.n; ++jx) {
                const double kx = sc * g.mode(jx);
                const double k2 = kx * kx + ky * ky + kz * kz;
                const long i = g.index(jx, jy, jz);
                out[i] = k2 > 0.0 ? m[i] / k2 : Complex{};
            }
        }
    }
    return ScalarField::from_modes(g, std::move(out));
}

double spectral_l2(const ScalarField& f) {
    auto m = f.modes();
    double acc = 0.0;
    for (const Complex& c : m) acc += std::norm(c);
    return std::sqrt(f.grid().volume() * acc);
}

double spectral_l2(const VectorField& v) {
    const double a = spectral_l2(v[0]);
    const double b = spectral_l2(v[1]);
    const double c = spectral_l2(v[2]);
    return std::sqrt(a * a + b * b + c * c);
}

double h1_norm(const VectorField& v) {
    const Grid& g = v.grid();
    const double s = g.wave_scale();
    double acc = 0.0;
    for (int jz = 0; jz < g.n; ++jz) {
        const double kz = s * g.mode(jz);
        for (int jy = 0; jy < g.n; ++jy) {
            const double ky = s * g.mode(jy);
            for (int jx = 0; jx < g.n; ++jx) {
                const double kx = s * g.mode(jx);
                const double w = 1.0 + kx * kx + ky * ky + kz * kz;
                const long i = g.index(jx, jy, jz);
                acc += w * (std::norm(v[0].modes()[i]) + std::norm(v[1].modes()[i]) +
                            std::norm(v[2].modes()[i]));
            }
        }
    }
    return std::sqrt(g.volume() * acc);
}

}  // namespace mpns
