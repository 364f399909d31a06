#include "mpns/monitor.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "mpns/fft.hpp"
#include "mpns/operators.hpp"
#include "mpns/solver.hpp"

namespace mpns {
namespace {

constexpr double kRelTol = 1e-12;

double spectral_inner(const ScalarField& f, const ScalarField& g) {
    auto a = f.modes();
    auto b = g.modes();
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        acc += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    return f.grid().volume() * acc;
}

double spectral_inner(const VectorField& f, const VectorField& g) {
    return spectral_inner(f[0], g[0]) + spectral_inner(f[1], g[1]) +
           spectral_inner(f[2], g[2]);
}

// int (a . grad) b . c dx by real-space quadrature; inputs spectral and
// band-limited, so the cubic integrand is quadrature-exact.
double advective_triple(const VectorField& a, const VectorField& b, const VectorField& c) {
    const Grid& g = a.grid();
    std::array<ScalarField, 3> ar{to_real(a[0]), to_real(a[1]), to_real(a[2])};
    std::array<ScalarField, 3> cr{to_real(c[0]), to_real(c[1]), to_real(c[2])};
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const ScalarField dj = to_real(partial(b[i], j + 1));
            auto aj = ar[j].samples();
            auto dv = dj.samples();
            auto ci = cr[i].samples();
            double term = 0.0;
            for (size_t idx = 0; idx < dv.size(); ++idx) term += aj[idx] * dv[idx] * ci[idx];
            acc += term;
        }
    }
    return acc * g.cell_volume();
}

double ratio_flagging(const char* what, double lhs, double rhs) {
    if (rhs == 0.0) {
        if (lhs == 0.0) return 0.0;
        throw std::domain_error(std::string(what) +
                                ": zero rhs with nonzero lhs (convention inconsistency)");
    }
    return lhs / rhs;
}

constexpr const char* kCsvHeader =
    "t,E,diss_grad,diss_div,diss_omega,h1_u,h1_w,d3u_l2,d3w_l2,morrey_d3,Q_r,gronwall,"
    "estA4_lhs,estA4_rhs,estA5_lhs,estA5_rhs";

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void require_monotone(const CriterionTrace& t) {
    for (size_t i = 1; i < t.times.size(); ++i)
        if (!(t.times[i] > t.times[i - 1]))
            throw std::invalid_argument("trace has non-monotone times");
}

double trapezoid_total(const std::vector<double>& times, const std::vector<double>& values) {
    double acc = 0.0;
    for (size_t i = 1; i < times.size(); ++i)
        acc += 0.5 * (times[i] - times[i - 1]) * (values[i] + values[i - 1]);
    return acc;
}

}  // namespace

std::string serrin_relation(double alpha, double beta) {
    if (!(alpha >= 1.0) || !(beta > 0.0))
        throw std::invalid_argument("serrin_relation: need alpha >= 1 and beta > 0");
    const double s = 3.0 / alpha + 2.0 / beta;  // 3/inf = 0
    std::string found;
    auto append = [&found](const char* rel) {
        if (!found.empty()) found += " & ";
        found += rel;
    };
    if (alpha >= 2.0 && s <= 1.0 + kRelTol) append("3/alpha + 2/beta <= 1");
    if (alpha > 3.0 && s <= 1.5 + kRelTol) append("3/alpha + 2/beta <= 3/2");
    if (alpha > 2.0 && std::abs(s - 0.75 - 1.0 / alpha) <= kRelTol)
        append("3/alpha + 2/beta = 3/4 + 1/alpha");
    if (found.empty())
        throw std::invalid_argument("serrin_relation: pair satisfies none of the relations");
    return found;
}

double criterion_exponent(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("criterion_exponent: r must be in (0, 1)");
    return 2.0 / (1.0 - r);
}

EstimateSides estimate_trace(const State& s, double r, const MorreyParams& mp) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("estimate_trace: r must be in (0, 1)");
    EstimateSides e;
    e.r = r;
    const VectorField d3u = partial(s.u, 3);
    const VectorField d3w = partial(s.w, 3);
    e.a1 = spectral_inner(partial(curl(s.w), 3), d3u);
    e.a2 = spectral_inner(partial(curl(s.u), 3), d3w);
    const double d3w_l2 = spectral_l2(d3w);
    e.a3 = -2.0 * d3w_l2 * d3w_l2;
    e.a4 = -advective_triple(d3u, s.u, d3u);
    e.a5 = -advective_triple(d3u, s.w, d3w);

    const VectorField d3u_real{{to_real(d3u[0]), to_real(d3u[1]), to_real(d3u[2])}};
    const double morrey_d3 = morrey_norm(d3u_real, 2.0, 3.0 / r, mp);
    const double d3u_l2 = spectral_l2(d3u);
    const double grad_d3u = sobolev_hdot_norm(d3u, 1.0);
    const double grad_d3w = sobolev_hdot_norm(d3w, 1.0);
    const double grad_u = sobolev_hdot_norm(s.u, 1.0);
    const double grad_w = sobolev_hdot_norm(s.w, 1.0);

    e.lhs_a4 = std::abs(e.a4);
    e.rhs_a4 = morrey_d3 * std::pow(d3u_l2, 1.0 - r) * std::pow(grad_d3u, r) * grad_u;
    e.ratio_a4 = ratio_flagging("estimate_trace(A4)", e.lhs_a4, e.rhs_a4);
    e.lhs_a5 = std::abs(e.a5);
    e.rhs_a5 = morrey_d3 * std::pow(d3w_l2, 1.0 - r) * std::pow(grad_d3w, r) * grad_w;
    e.ratio_a5 = ratio_flagging("estimate_trace(A5)", e.lhs_a5, e.rhs_a5);

    e.cross_lhs = e.a1 + e.a2 + e.a3;
    e.cross_rhs = 0.5 * grad_d3u * grad_d3u;
    e.curl_identity_gap =
        std::abs(e.a1 - e.a2) / std::max({std::abs(e.a1), std::abs(e.a2), 1e-300});
    return e;
}

void MonitorConfig::validate() const {
    if (cadence < 1) throw std::invalid_argument("MonitorConfig: cadence must be >= 1");
    for (double r : r_values)
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("MonitorConfig: r values must lie in (0, 1)");
    for (const SerrinPair& p : serrin_pairs) serrin_relation(p.alpha, p.beta);
}

RegularityMonitor::RegularityMonitor(MonitorConfig cfg) : cfg_(std::move(cfg)) {
    cfg_.validate();
    for (double r : cfg_.r_values) {
        RSeries rs;
        rs.r = r;
        trace_.r_series.push_back(std::move(rs));
    }
    prev_qr_.assign(cfg_.r_values.size(), 0.0);
    for (const SerrinPair& p : cfg_.serrin_pairs) {
        SerrinSeries ss;
        ss.pair = p;
        ss.pair.relation = serrin_relation(p.alpha, p.beta);
        trace_.serrin.push_back(std::move(ss));
    }
    prev_serrin_strong_.assign(cfg_.serrin_pairs.size(), 0.0);
    prev_serrin_weak_.assign(cfg_.serrin_pairs.size(), 0.0);
}

std::function<void(const State&, long)> RegularityMonitor::callback() {
    return [this](const State& s, long step) { observe(s, step); };
}

void RegularityMonitor::observe(const State& s, long) {
    if (!trace_.times.empty() && !(s.t > trace_.times.back()))
        throw std::invalid_argument("RegularityMonitor: non-monotone sample times");
    const bool first = trace_.times.empty();
    const double dt_s = first ? 0.0 : s.t - trace_.times.back();

    const double u_l2 = spectral_l2(s.u);
    const double w_l2 = spectral_l2(s.w);
    const double energy = u_l2 * u_l2 + w_l2 * w_l2;
    const double grad_u = sobolev_hdot_norm(s.u, 1.0);
    const double grad_w = sobolev_hdot_norm(s.w, 1.0);
    const double div_w = spectral_l2(divergence(s.w));
    const VectorField d3u = partial(s.u, 3);
    const VectorField d3w = partial(s.w, 3);
    const double d3u_l2 = spectral_l2(d3u);
    const double d3w_l2 = spectral_l2(d3w);
    const VectorField d3u_real{{to_real(d3u[0]), to_real(d3u[1]), to_real(d3u[2])}};

    auto accumulate = [&](std::vector<double>& cumulative, double& prev, double current) {
        const double prev_total = first ? 0.0 : cumulative.back();
        cumulative.push_back(prev_total + (first ? 0.0 : 0.5 * dt_s * (prev + current)));
        prev = current;
    };

    accumulate(trace_.diss_grad, prev_diss_g_, grad_u * grad_u + grad_w * grad_w);
    accumulate(trace_.diss_div, prev_diss_d_, div_w * div_w);
    accumulate(trace_.diss_omega, prev_diss_o_, w_l2 * w_l2);

    for (size_t ri = 0; ri < trace_.r_series.size(); ++ri) {
        RSeries& rs = trace_.r_series[ri];
        const double m = morrey_norm(d3u_real, 2.0, 3.0 / rs.r, cfg_.morrey);
        rs.morrey_d3.push_back(m);
        accumulate(rs.q_r, prev_qr_[ri], std::pow(m, criterion_exponent(rs.r)));
        if (cfg_.estimates) {
            const EstimateSides e = estimate_trace(s, rs.r, cfg_.morrey);
            rs.est_a4_lhs.push_back(e.lhs_a4);
            rs.est_a4_rhs.push_back(e.rhs_a4);
            rs.est_a5_lhs.push_back(e.lhs_a5);
            rs.est_a5_rhs.push_back(e.rhs_a5);
        } else {
            rs.est_a4_lhs.push_back(0.0);
            rs.est_a4_rhs.push_back(0.0);
            rs.est_a5_lhs.push_back(0.0);
            rs.est_a5_rhs.push_back(0.0);
        }
    }

    for (size_t si = 0; si < trace_.serrin.size(); ++si) {
        SerrinSeries& ss = trace_.serrin[si];
        const double alpha = ss.pair.alpha;
        const double strong = lp_norm(d3u_real, alpha);
        const double weak = std::isinf(alpha) ? strong : weak_lp_norm(d3u_real, alpha);
        ss.strong.push_back(strong);
        ss.weak.push_back(weak);
        accumulate(ss.integral_strong, prev_serrin_strong_[si],
                   std::pow(strong, ss.pair.beta));
        accumulate(ss.integral_weak, prev_serrin_weak_[si], std::pow(weak, ss.pair.beta));
    }

    if (first) {
        trace_.initial_energy = energy;
        trace_.u0_sq = u_l2 * u_l2;
        trace_.w0_sq = w_l2 * w_l2;
        trace_.d3u0_sq = d3u_l2 * d3u_l2;
        trace_.d3w0_sq = d3w_l2 * d3w_l2;
    }
    trace_.times.push_back(s.t);
    trace_.energy.push_back(energy);
    trace_.h1_u.push_back(grad_u);
    trace_.h1_w.push_back(grad_w);
    trace_.d3u_l2.push_back(d3u_l2);
    trace_.d3w_l2.push_back(d3w_l2);
    trace_.gronwall.push_back(1.0 + d3u_l2 * d3u_l2 + d3w_l2 * d3w_l2);
    trace_.sup_h1_u = std::max(trace_.sup_h1_u, std::hypot(u_l2, grad_u));
    trace_.sup_h1_w = std::max(trace_.sup_h1_w, std::hypot(w_l2, grad_w));
}

EnergyReport energy_inequality_check(const CriterionTrace& t, double tol) {
    if (t.size() < 2)
        throw std::invalid_argument("energy_inequality_check: need at least 2 samples");
    require_monotone(t);
    EnergyReport rep;
    rep.initial_energy = t.initial_energy;
    rep.tolerance = tol;
    double max_defect = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < t.size(); ++i) {
        const double lhs = t.energy[i] +
                           2.0 * (t.diss_grad[i] + t.diss_div[i] + t.diss_omega[i]);
        max_defect = std::max(max_defect, lhs - t.initial_energy);
    }
    rep.max_defect = max_defect;
    rep.relative_defect = t.initial_energy > 0.0 ? max_defect / t.initial_energy : max_defect;
    rep.satisfied = max_defect <= tol * std::max(t.initial_energy, 0.0);
    return rep;
}

double criterion_integral(const CriterionTrace& t, double r) {
    const double expo = criterion_exponent(r);
    for (const RSeries& rs : t.r_series) {
        if (std::abs(rs.r - r) > 1e-12) continue;
        require_monotone(t);
        std::vector<double> integrand(rs.morrey_d3.size());
        for (size_t i = 0; i < integrand.size(); ++i)
            integrand[i] = std::pow(rs.morrey_d3[i], expo);
        return trapezoid_total(t.times, integrand);
    }
    throw std::invalid_argument("criterion_integral: trace was not recorded at this r");
}

std::vector<SerrinQuantity> serrin_quantities(
    const CriterionTrace& t, const std::vector<std::pair<double, double>>& pairs) {
    require_monotone(t);
    std::vector<SerrinQuantity> out;
    for (const auto& [alpha, beta] : pairs) {
        SerrinQuantity q;
        q.alpha = alpha;
        q.beta = beta;
        q.relation = serrin_relation(alpha, beta);  // rejects invalid pairs
        bool found = false;
        for (const SerrinSeries& ss : t.serrin) {
            if (std::abs(ss.pair.alpha - alpha) > 1e-12 ||
                std::abs(ss.pair.beta - beta) > 1e-12)
                continue;
            std::vector<double> strong(ss.strong.size()), weak(ss.weak.size());
            for (size_t i = 0; i < strong.size(); ++i) {
                strong[i] = std::pow(ss.strong[i], beta);
                weak[i] = std::pow(ss.weak[i], beta);
            }
            q.integral_strong = trapezoid_total(t.times, strong);
            q.integral_weak = trapezoid_total(t.times, weak);
            found = true;
            break;
        }
        if (!found)
            throw std::invalid_argument("serrin_quantities: pair was not recorded in trace");
        out.push_back(std::move(q));
    }
    return out;
}

GronwallReport gronwall_bound(const CriterionTrace& t, double r, double constant) {
    GronwallReport rep;
    rep.constant = constant;
    const double q_r = criterion_integral(t, r);
    rep.bound = (1.0 + t.d3u0_sq + t.d3w0_sq) *
                std::exp(constant * (q_r + t.u0_sq + t.w0_sq));
    rep.actual_max = 1.0;
    for (double g : t.gronwall) rep.actual_max = std::max(rep.actual_max, g);
    return rep;
}

std::string trace_csv_header() { return kCsvHeader; }

void write_trace_csv(const CriterionTrace& t, const std::string& path, size_t r_index) {
    if (r_index >= t.r_series.size())
        throw std::invalid_argument("write_trace_csv: r_index out of range");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_trace_csv: cannot open " + path);
    out << kCsvHeader << "\n";
    const RSeries& rs = t.r_series[r_index];
    for (size_t i = 0; i < t.size(); ++i) {
        out << fmt(t.times[i]) << ',' << fmt(t.energy[i]) << ',' << fmt(t.diss_grad[i])
            << ',' << fmt(t.diss_div[i]) << ',' << fmt(t.diss_omega[i]) << ','
            << fmt(t.h1_u[i]) << ',' << fmt(t.h1_w[i]) << ',' << fmt(t.d3u_l2[i]) << ','
            << fmt(t.d3w_l2[i]) << ',' << fmt(rs.morrey_d3[i]) << ',' << fmt(rs.q_r[i])
            << ',' << fmt(t.gronwall[i]) << ',' << fmt(rs.est_a4_lhs[i]) << ','
            << fmt(rs.est_a4_rhs[i]) << ',' << fmt(rs.est_a5_lhs[i]) << ','
            << fmt(rs.est_a5_rhs[i]) << "\n";
    }
}

void write_trace_jsonl(const CriterionTrace& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_trace_jsonl: cannot open " + path);
    for (size_t i = 0; i < t.size(); ++i) {
        nlohmann::json j;
        j["t"] = t.times[i];
        j["E"] = t.energy[i];
        j["diss_grad"] = t.diss_grad[i];
        j["diss_div"] = t.diss_div[i];
        j["diss_omega"] = t.diss_omega[i];
        j["h1_u"] = t.h1_u[i];
        j["h1_w"] = t.h1_w[i];
        j["d3u_l2"] = t.d3u_l2[i];
        j["d3w_l2"] = t.d3w_l2[i];
        j["gronwall"] = t.gronwall[i];
        nlohmann::json rj = nlohmann::json::array();
        for (const RSeries& rs : t.r_series)
            rj.push_back({{"r", rs.r},
                          {"morrey_d3", rs.morrey_d3[i]},
                          {"Q_r", rs.q_r[i]},
                          {"estA4_lhs", rs.est_a4_lhs[i]},
                          {"estA4_rhs", rs.est_a4_rhs[i]},
                          {"estA5_lhs", rs.est_a5_lhs[i]},
                          {"estA5_rhs", rs.est_a5_rhs[i]}});
        j["r_series"] = rj;
        nlohmann::json sj = nlohmann::json::array();
        for (const SerrinSeries& ss : t.serrin) {
            nlohmann::json e = {{"beta", ss.pair.beta},
                                {"relation", ss.pair.relation},
                                {"strong", ss.strong[i]},
                                {"weak", ss.weak[i]},
                                {"int_strong", ss.integral_strong[i]},
                                {"int_weak", ss.integral_weak[i]}};
            e["alpha"] = std::isinf(ss.pair.alpha) ? nlohmann::json("inf")
                                                   : nlohmann::json(ss.pair.alpha);
            sj.push_back(e);
        }
        j["serrin"] = sj;
        if (t.blowup_flagged) j["blowup"] = t.blowup_reason;
        out << j.dump() << "\n";
    }
}

}  // namespace mpns
