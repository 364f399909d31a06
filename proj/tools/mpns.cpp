#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "mpns/config.hpp"
#include "mpns/fft.hpp"
#include "mpns/norms.hpp"
#include "mpns/run.hpp"
#include "mpns/snapshot.hpp"
#include "mpns/validation.hpp"

namespace {

int cmd_simulate(const std::string& config_path) {
    const mpns::RunConfig cfg = mpns::parse_run_config_file(config_path);
    const mpns::RunResult r = mpns::run(cfg);
    if (r.aborted)
        std::printf("aborted after %ld steps: %s\n", r.steps, r.reason.c_str());
    else
        std::printf("completed %ld steps\n", r.steps);
    std::printf("outputs: %s\nhash: %s\n", r.output_directory.c_str(),
                r.combined_hash.c_str());
    return r.exit_code;
}

int cmd_bench(int ensemble, std::vector<double> r_list, uint64_t seed, int n,
              const std::string& out, int threads, int trials, double slope) {
    mpns::BenchOptions opts;
    opts.n = n;
    opts.output_path = out;
    opts.threads = threads;
    opts.xr_trials = trials;
    opts.slope = slope;
    const mpns::BenchSummary summary = mpns::bench_inequalities(ensemble, r_list, seed, opts);
    std::printf("%s\n", summary.to_json().c_str());
    return 0;
}

int cmd_norms(const std::string& input, const std::string& kind, double p, double q,
              double r, int trials, const std::string& field, int component) {
    using namespace mpns;
    double time = 0.0;
    VectorField v = field == "w" ? [&] {
        const State s = read_state_snapshot(input);
        return as_real(s.w);
    }()
                                 : read_field_snapshot(input, &time);
    NormReport rep;
    rep.grid = v.grid();
    ScalarField scalar =
        component >= 1 && component <= 3 ? v[component - 1] : magnitude(v);

    if (kind == "lp") {
        rep.kind = NormKind::Lp;
        rep.params = {{"p", p}};
        rep.value = component == 0 ? lp_norm(v, p) : lp_norm(scalar, p);
    } else if (kind == "weaklp") {
        rep.kind = NormKind::WeakLp;
        rep.params = {{"p", p}};
        rep.value = component == 0 ? weak_lp_norm(v, p) : weak_lp_norm(scalar, p);
    } else if (kind == "hdot") {
        rep.kind = NormKind::SobolevHdot;
        rep.params = {{"r", r}};
        rep.value = component == 0 ? sobolev_hdot_norm(to_spectral(v), r)
                                   : sobolev_hdot_norm(to_spectral(scalar), r);
    } else if (kind == "besov") {
        rep.kind = NormKind::BesovB21r;
        rep.params = {{"r", r}};
        rep.value = component == 0 ? besov_b21r_norm(to_spectral(v), r)
                                   : besov_b21r_norm(to_spectral(scalar), r);
    } else if (kind == "morrey") {
        rep.kind = NormKind::MorreyM;
        rep.params = {{"p", p}, {"q", q}};
        rep.value = component == 0 ? morrey_norm(v, p, q) : morrey_norm(scalar, p, q);
    } else if (kind == "xr") {
        rep.kind = NormKind::XrLowerBound;
        rep.params = {{"r", r}, {"trials", static_cast<double>(trials)}};
        rep.value = xr_lower_bound(scalar, r, trials);
    } else {
        std::fprintf(stderr, "unknown norm kind '%s'\n", kind.c_str());
        return 2;
    }
    std::printf("%s\n", rep.to_json_line().c_str());
    return 0;
}

int cmd_oracle_check() {
    int failures = 0;
    for (const mpns::OracleCheckResult& r : mpns::run_oracle_checks()) {
        std::printf("[%s] %-34s rel_err=%.3e tol=%.0e\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.max_rel_err, r.tolerance);
        if (!r.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Micropolar pseudo-spectral solver and regularity-criterion toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    CLI::App* sim = app.add_subcommand("simulate", "Run a monitored simulation");
    sim->add_option("--config", config_path, "Run configuration (.json or .toml)")
        ->required()
        ->check(CLI::ExistingFile);

    int ensemble = 100;
    std::vector<double> r_list{0.5};
    uint64_t seed = 0;
    int bench_n = 16;
    std::string bench_out;
    int threads = 0;
    int trials = 8;
    CLI::App* bench = app.add_subcommand("bench", "Inequality test bench over random ensembles");
    bench->add_option("--ensemble", ensemble, "Ensemble size")->check(CLI::PositiveNumber);
    bench->add_option("--r", r_list, "r values in (0,1)")->delimiter(',');
    bench->add_option("--seed", seed, "Base seed");
    bench->add_option("--n", bench_n, "Grid points per axis");
    bench->add_option("--out", bench_out, "JSONL report path");
    bench->add_option("--threads", threads, "Worker threads (default: MPNS_THREADS or 1)");
    bench->add_option("--trials", trials, "Trial-family size for the Xr lower bound");
    double slope = 1.0;
    bench->add_option("--slope", slope, "Spectrum slope of the random ensemble");

    std::string input, kind = "lp", field = "u";
    double p = 2.0, q = 6.0, r = 0.5;
    int component = 0;
    CLI::App* norms = app.add_subcommand("norms", "Evaluate a norm on a snapshot field");
    norms->add_option("--input", input, "Snapshot file")->required()->check(CLI::ExistingFile);
    norms->add_option("--kind", kind, "lp | weaklp | hdot | besov | morrey | xr");
    norms->add_option("--p", p, "Lebesgue/Morrey exponent p");
    norms->add_option("--q", q, "Morrey exponent q");
    norms->add_option("--r", r, "Smoothness index r");
    norms->add_option("--trials", trials, "Trial count for xr");
    norms->add_option("--field", field, "u (first 3 components) or w (last 3)");
    norms->add_option("--component", component, "0 = magnitude, 1..3 = single component");

    CLI::App* oracle = app.add_subcommand("oracle-check", "Cross-validate fast paths vs oracles");

    CLI11_PARSE(app, argc, argv);
    try {
        if (sim->parsed()) return cmd_simulate(config_path);
        if (bench->parsed())
            return cmd_bench(ensemble, r_list, seed, bench_n, bench_out, threads, trials,
                             slope);
        if (norms->parsed()) return cmd_norms(input, kind, p, q, r, trials, field, component);
        if (oracle->parsed()) return cmd_oracle_check();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
