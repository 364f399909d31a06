#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpns/generators.hpp"
#include "mpns/monitor.hpp"
#include "mpns/solver.hpp"

namespace mpns {

struct OutputConfig {
    std::string directory = "out";
    bool csv = true;
    bool jsonl = true;
    bool snapshot = true;
};

struct RunConfig {
    uint64_t seed = 0;
    SolverConfig solver;
    GeneratorSpec initial;
    MonitorConfig monitor;
    OutputConfig output;

    void validate() const;
};

/// Reads a run configuration from a .json or .toml file (chosen by
/// extension).  Schema documented in the README; the TOML reader covers the
/// subset used there (sections, scalars, arrays, inf).
RunConfig parse_run_config_file(const std::string& path);
RunConfig parse_run_config_json(const std::string& text);
RunConfig parse_run_config_toml(const std::string& text);

std::string run_config_to_json(const RunConfig& cfg);

}  // namespace mpns
