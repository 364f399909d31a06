#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mpns/field.hpp"
#include "mpns/norms.hpp"

namespace mpns {

/// One Serrin-type space-time pair with the scaling relation(s) it satisfies.
struct SerrinPair {
    double alpha = 0.0;  // may be infinity
    double beta = 0.0;
    std::string relation;
};

/// Validates (alpha, beta) against the three admissible scaling relations
///   3/alpha + 2/beta <= 1    with 2 <= alpha <= inf
///   3/alpha + 2/beta <= 3/2  with alpha > 3
///   3/alpha + 2/beta = 3/4 + 1/alpha  with alpha > 2
/// Returns the satisfied relation(s); throws std::invalid_argument if none.
std::string serrin_relation(double alpha, double beta);

/// Exponent 2/(1-r) of the criterion integral, 0 < r < 1.
double criterion_exponent(double r);

/// Per-state sides of the proof's differential estimates.
struct EstimateSides {
    double r = 0.0;
    double a1 = 0.0;  //  int d3(curl w) . d3 u
    double a2 = 0.0;  //  int d3(curl u) . d3 w
    double a3 = 0.0;  // -2 ||d3 w||^2
    double a4 = 0.0;  // -int (d3u . grad) u . d3u
    double a5 = 0.0;  // -int (d3u . grad) w . d3w
    double lhs_a4 = 0.0, rhs_a4 = 0.0, ratio_a4 = 0.0;
    double lhs_a5 = 0.0, rhs_a5 = 0.0, ratio_a5 = 0.0;
    double cross_lhs = 0.0;  // a1 + a2 + a3
    double cross_rhs = 0.0;  // (1/2) ||grad d3 u||^2
    double curl_identity_gap = 0.0;  // |a1 - a2| relative
};

EstimateSides estimate_trace(const State& s, double r, const MorreyParams& mp = {});

/// Time series for one monitored r value.
struct RSeries {
    double r = 0.0;
    std::vector<double> morrey_d3;  // ||d3 u||_{M_{2,3/r}}
    std::vector<double> q_r;        // cumulative criterion integral
    std::vector<double> est_a4_lhs, est_a4_rhs, est_a5_lhs, est_a5_rhs;
};

struct SerrinSeries {
    SerrinPair pair;
    std::vector<double> strong;  // ||d3 u||_{L^alpha}
    std::vector<double> weak;    // ||d3 u||_{L^{alpha,inf}}
    std::vector<double> integral_strong;  // cumulative int strong^beta
    std::vector<double> integral_weak;
};

struct CriterionTrace {
    std::vector<double> times;
    std::vector<double> energy;     // ||u||^2 + ||w||^2
    std::vector<double> diss_grad;  // cumulative int (||grad u||^2 + ||grad w||^2)
    std::vector<double> diss_div;   // cumulative int ||div w||^2
    std::vector<double> diss_omega; // cumulative int ||w||^2
    std::vector<double> h1_u, h1_w;      // ||grad u||_2, ||grad w||_2
    std::vector<double> d3u_l2, d3w_l2;
    std::vector<double> gronwall;   // 1 + ||d3u||^2 + ||d3w||^2
    std::vector<RSeries> r_series;
    std::vector<SerrinSeries> serrin;
    double initial_energy = 0.0;
    double u0_sq = 0.0, w0_sq = 0.0, d3u0_sq = 0.0, d3w0_sq = 0.0;
    double sup_h1_u = 0.0, sup_h1_w = 0.0;
    bool blowup_flagged = false;
    std::string blowup_reason;

    size_t size() const { return times.size(); }
};

struct MonitorConfig {
    int cadence = 10;
    std::vector<double> r_values{0.5};
    std::vector<SerrinPair> serrin_pairs;
    MorreyParams morrey;
    double gronwall_constant = 1.0;
    bool estimates = true;  // record the A4/A5 estimate sides

    void validate() const;
};

/// Accumulates a CriterionTrace along a trajectory; plug `callback()` into
/// simulate().  Time integrals use the trapezoid rule on the observation
/// cadence, so they are nondecreasing by construction.
class RegularityMonitor {
  public:
    explicit RegularityMonitor(MonitorConfig cfg);

    void observe(const State& s, long step_index);
    std::function<void(const State&, long)> callback();

    const CriterionTrace& trace() const { return trace_; }
    CriterionTrace& trace() { return trace_; }
    const MonitorConfig& config() const { return cfg_; }

  private:
    MonitorConfig cfg_;
    CriterionTrace trace_;
    // previous integrand values for the trapezoid accumulators
    double prev_diss_g_ = 0.0, prev_diss_d_ = 0.0, prev_diss_o_ = 0.0;
    std::vector<double> prev_qr_;
    std::vector<double> prev_serrin_strong_, prev_serrin_weak_;
};

struct EnergyReport {
    double initial_energy = 0.0;
    double max_defect = 0.0;       // max_t  E + 2*int(...) - E(0), signed
    double relative_defect = 0.0;  // max_defect / E(0)
    double tolerance = 0.0;
    bool satisfied = false;
};

/// Checks E(t) + 2 int (||grad u||^2 + ||grad w||^2) + 2 int ||div w||^2
///            + 2 int ||w||^2  <=  E(0) (1 + tol) along the trace.
EnergyReport energy_inequality_check(const CriterionTrace& t, double tol = 1e-4);

/// Q_r(T) = int_0^T ||d3 u||_{M_{2,3/r}}^{2/(1-r)} dt over the trace samples;
/// the trace must have been recorded with this r.
double criterion_integral(const CriterionTrace& t, double r);

struct SerrinQuantity {
    double alpha = 0.0, beta = 0.0;
    std::string relation;
    double integral_strong = 0.0;
    double integral_weak = 0.0;
};

std::vector<SerrinQuantity> serrin_quantities(
    const CriterionTrace& t, const std::vector<std::pair<double, double>>& pairs);

struct GronwallReport {
    double bound = 0.0;      // (1+||d3u0||^2+||d3w0||^2) exp(C (Q_r + ||u0||^2 + ||w0||^2))
    double actual_max = 0.0; // max over the trace of 1 + ||d3u||^2 + ||d3w||^2
    double constant = 1.0;
};

GronwallReport gronwall_bound(const CriterionTrace& t, double r, double constant = 1.0);

/// CSV trace (one row per sample, fixed 16-column header); r_index selects
/// which monitored r fills the morrey/Q_r/estimate columns.
void write_trace_csv(const CriterionTrace& t, const std::string& path, size_t r_index = 0);
std::string trace_csv_header();

/// JSONL trace with the full per-sample record (all r values, all pairs).
void write_trace_jsonl(const CriterionTrace& t, const std::string& path);

}  // namespace mpns
