#pragma once

#include <string>
#include <vector>

namespace mpns {

struct OracleCheckResult {
    std::string name;
    double max_rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Cross-validates each fast path against its brute-force oracle on fixed
/// seeds: transforms vs the naive DFT, advection vs direct convolution, the
/// Morrey sup vs direct ball integration, weak-Lp vs a dense level sweep,
/// and the time stepper vs the per-mode matrix exponential.
std::vector<OracleCheckResult> run_oracle_checks();

}  // namespace mpns
