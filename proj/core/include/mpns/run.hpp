#pragma once

#include <map>
#include <string>
#include <vector>

#include "mpns/checks.hpp"
#include "mpns/config.hpp"

namespace mpns {

struct RunResult {
    int exit_code = 0;
    bool aborted = false;
    std::string reason;
    std::string output_directory;
    std::string combined_hash;
    long steps = 0;
};

/// Full orchestration: generate initial data, simulate with the monitor
/// attached, and emit trace CSV/JSONL, a final snapshot and a manifest with
/// content hashes.  MPNS_OUTPUT_DIR overrides the configured directory.
/// A solver abort still writes the partial trace and a flagged manifest.
RunResult run(const RunConfig& cfg);

struct BenchOptions {
    int n = 16;
    double slope = 1.0;  // flat-ish spectra make ensemble maxima concentrate
    int xr_trials = 8;
    double chain_p = 2.0;
    MorreyParams morrey{};
    std::string output_path;  // JSONL report; empty writes no file
    int threads = 0;          // 0: MPNS_THREADS env var, else 1
};

struct BenchSummary {
    int ensemble = 0;
    uint64_t seed = 0;
    std::vector<InequalityCheck> records;
    // max observed ratio keyed by "<check name>[@r=<r>]"
    std::map<std::string, double> max_ratios;

    std::string to_json() const;
};

/// Batch driver for the inequality checkers over seeded random band-limited
/// ensembles; one record per check per member, reproducible bit-for-bit for
/// a fixed seed.
BenchSummary bench_inequalities(int ensemble, const std::vector<double>& r_list,
                                uint64_t seed, const BenchOptions& opts = {});

}  // namespace mpns
