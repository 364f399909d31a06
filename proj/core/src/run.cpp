#include "mpns/run.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "mpns/fft.hpp"
#include "mpns/generators.hpp"
#include "mpns/manifest.hpp"
#include "mpns/operators.hpp"
#include "mpns/rng.hpp"
#include "mpns/snapshot.hpp"

namespace mpns {
namespace fs = std::filesystem;

RunResult run(const RunConfig& cfg_in) {
    RunConfig cfg = cfg_in;
    if (const char* dir = std::getenv("MPNS_OUTPUT_DIR"); dir && *dir)
        cfg.output.directory = dir;
    cfg.validate();
    fs::create_directories(cfg.output.directory);
    const auto out_path = [&](const char* name) {
        return (fs::path(cfg.output.directory) / name).string();
    };

    const State initial = generate_initial(cfg.initial, cfg.solver.grid, cfg.seed);
    RegularityMonitor monitor(cfg.monitor);
    const SimulationResult sim =
        simulate(cfg.solver, initial, monitor.callback(), cfg.monitor.cadence);

    RunResult result;
    result.aborted = sim.aborted;
    result.reason = sim.reason;
    result.steps = sim.steps;
    result.output_directory = cfg.output.directory;
    if (sim.aborted) {
        monitor.trace().blowup_flagged = true;
        monitor.trace().blowup_reason = sim.reason;
    }

    std::vector<std::pair<std::string, std::string>> hashes;
    if (cfg.output.csv && !monitor.trace().times.empty()) {
        const std::string p = out_path("trace.csv");
        write_trace_csv(monitor.trace(), p);
        hashes.emplace_back("trace.csv", sha256_file_hex(p));
    }
    if (cfg.output.jsonl && !monitor.trace().times.empty()) {
        const std::string p = out_path("trace.jsonl");
        write_trace_jsonl(monitor.trace(), p);
        hashes.emplace_back("trace.jsonl", sha256_file_hex(p));
    }
    if (cfg.output.snapshot) {
        const std::string p = out_path("final.fld");
        write_state_snapshot(p, sim.state);
        hashes.emplace_back("final.fld", sha256_file_hex(p));
    }

    nlohmann::json manifest;
    manifest["config"] = nlohmann::json::parse(run_config_to_json(cfg));
    manifest["aborted"] = sim.aborted;
    if (sim.aborted) manifest["reason"] = sim.reason;
    manifest["steps"] = sim.steps;
    manifest["final_time"] = sim.state.t;
    nlohmann::json outs = nlohmann::json::object();
    for (const auto& [name, hash] : hashes) outs[name] = hash;
    manifest["outputs"] = outs;
    result.combined_hash = combined_hash(hashes);
    manifest["hash"] = result.combined_hash;
    std::ofstream mf(out_path("manifest.json"), std::ios::binary);
    mf << manifest.dump(2) << "\n";

    result.exit_code = sim.aborted ? 1 : 0;
    return result;
}

namespace {

std::vector<InequalityCheck> bench_member(int member, uint64_t seed,
                                          const std::vector<double>& r_list,
                                          const BenchOptions& opts) {
    const Grid grid(opts.n);
    const uint64_t member_seed = derive_seed(seed, static_cast<uint64_t>(member));
    const int kmax = dealias_limit(opts.n, 2.0 / 3.0);
    const ScalarField f =
        random_band_limited_scalar(grid, member_seed, opts.slope, kmax);
    const ScalarField g = random_band_limited_scalar(grid, derive_seed(member_seed, 0xb),
                                                     opts.slope, kmax);
    const ScalarField fr = to_real(f);
    char sample[96];
    std::snprintf(sample, sizeof sample, "member=%d n=%d slope=%g", member, opts.n,
                  opts.slope);

    std::vector<InequalityCheck> records;
    auto push = [&](InequalityCheck c, double r) {
        c.seed = member_seed;
        c.sample = sample;
        if (r > 0.0) c.sample += " r=" + std::to_string(r);
        records.push_back(std::move(c));
    };

    for (double r : r_list) {
        push(check_lemma23(f, r), r);
        push(check_bilinear(f, g, r, opts.morrey), r);
        for (InequalityCheck c : check_embedding_chain(fr, r, opts.chain_p, opts.morrey))
            push(std::move(c), r);
        InequalityCheck xr;
        xr.name = "xr_lower_bound_vs_morrey";
        xr.lhs = xr_lower_bound(fr, r, opts.xr_trials);
        xr.rhs_without_constant = morrey_norm(fr, 2.0, 3.0 / r, opts.morrey);
        xr.observed_ratio = xr.rhs_without_constant > 0.0
                                ? xr.lhs / xr.rhs_without_constant
                                : 0.0;
        push(std::move(xr), r);
    }
    push(check_anisotropic_gn(f, 2.0, 2.0, 6.0), 0.0);
    for (double beta : {2.0, 3.0, 4.0, 6.0}) {
        InequalityCheck c = check_lemma25(f, beta);
        c.name += "_beta=" + std::to_string(static_cast<int>(beta));
        push(std::move(c), 0.0);
    }
    return records;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MPNS_THREADS"); env && *env) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

}  // namespace

std::string BenchSummary::to_json() const {
    nlohmann::json j;
    j["ensemble"] = ensemble;
    j["seed"] = seed;
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [key, value] : max_ratios) m[key] = value;
    j["max_ratios"] = m;
    return j.dump();
}

BenchSummary bench_inequalities(int ensemble, const std::vector<double>& r_list,
                                uint64_t seed, const BenchOptions& opts) {
    if (ensemble < 1) throw std::invalid_argument("bench_inequalities: ensemble must be >= 1");
    for (double r : r_list)
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("bench_inequalities: r values must lie in (0, 1)");

    std::vector<std::vector<InequalityCheck>> per_member(ensemble);
    const int threads = std::min(resolve_threads(opts.threads), ensemble);
    if (threads <= 1) {
        for (int m = 0; m < ensemble; ++m)
            per_member[m] = bench_member(m, seed, r_list, opts);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    const int m = next.fetch_add(1);
                    if (m >= ensemble) return;
                    per_member[m] = bench_member(m, seed, r_list, opts);
                }
            });
        for (std::thread& t : pool) t.join();
    }

    BenchSummary summary;
    summary.ensemble = ensemble;
    summary.seed = seed;
    for (auto& recs : per_member)
        for (InequalityCheck& c : recs) summary.records.push_back(std::move(c));
    for (const InequalityCheck& c : summary.records) {
        std::string key = c.name;
        const size_t rpos = c.sample.find(" r=");
        if (rpos != std::string::npos) key += "@" + c.sample.substr(rpos + 1);
        auto [it, inserted] = summary.max_ratios.try_emplace(key, c.observed_ratio);
        if (!inserted) it->second = std::max(it->second, c.observed_ratio);
    }

    if (!opts.output_path.empty()) {
        std::ofstream out(opts.output_path, std::ios::binary);
        if (!out)
            throw std::runtime_error("bench_inequalities: cannot open " + opts.output_path);
        for (const InequalityCheck& c : summary.records) out << c.to_json_line() << "\n";
        out << "{\"summary\":" << summary.to_json() << "}\n";
    }
    return summary;
}

}  // namespace mpns
