#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "mpns/field.hpp"

namespace mpns {

enum class Integrator { IFRK4 };

struct SolverConfig {
    Grid grid;
    double dt = 1e-3;
    double t_end = 1.0;
    double dealias = 2.0 / 3.0;
    Integrator integrator = Integrator::IFRK4;
    std::optional<double> cfl_cap = 0.5;
    // Test switches: `nonlinear` gates both advection terms, `coupling`
    // gates the curl exchange terms.  With coupling off and w = 0 the
    // velocity obeys plain Navier-Stokes.
    bool nonlinear = true;
    bool coupling = true;
    double blowup_factor = 1e6;

    void validate() const;
};

/// Raised on CFL violation, non-finite fields, or blow-up proxies.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Rhs {
    VectorField du;
    VectorField domega;
};

/// Pseudo-spectral advective product (v.grad)w: both inputs truncated to
/// |m| <= limit per axis, gradients formed spectrally, product in real
/// space, result transformed back and truncated again.
VectorField nonlinear_advection(const VectorField& v, const VectorField& w, int limit);

/// Full right-hand side of the coupled system with pressure eliminated:
///   du = P(-(u.grad)u + curl w) + Lap u
///   dw = -(u.grad)w + Lap w + grad div w - 2w + curl u
Rhs rhs(const State& s, const SolverConfig& cfg);

/// One integrating-factor RK4 step: the diagonal stiff part (Laplacian on
/// both fields, -2 on w) is advanced exactly per mode; advection, the curl
/// couplings and grad div w go through the classical RK4 stages.  Output is
/// re-projected.
State step(const State& s, const SolverConfig& cfg, double dt);

struct SimulationResult {
    State state;
    long steps = 0;
    bool aborted = false;
    std::string reason;
};

using SampleCallback = std::function<void(const State&, long step_index)>;

/// March from the initial state to t_end in steps of cfg.dt, invoking the
/// callback at the initial state, every `cadence` steps and the final step.
/// Step failures stop the run and come back as an aborted result holding
/// the last good state.
SimulationResult simulate(const SolverConfig& cfg, const State& initial,
                          const SampleCallback& on_sample = {}, int cadence = 10);

/// Diagnostic pressure: solves -Lap pi = div((u.grad)u) spectrally,
/// zero-mean pi.
ScalarField pressure_field(const State& s, const SolverConfig& cfg);

/// sqrt(||v||_2^2 + ||grad v||_2^2) from spectral coefficients.
double h1_norm(const VectorField& v);
/// Parseval L^2 norm from spectral coefficients.
double spectral_l2(const ScalarField& f);
double spectral_l2(const VectorField& v);

}  // namespace mpns
