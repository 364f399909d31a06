#include "mpns/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "toml_lite.hpp"

namespace mpns {
namespace {

using nlohmann::json;

double number_or_inf(const json& v, const char* what) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "Inf" || s == "infinity")
            return std::numeric_limits<double>::infinity();
        throw std::invalid_argument(std::string(what) + ": unrecognized value '" + s + "'");
    }
    return v.get<double>();
}

RunConfig from_json_tree(const json& j) {
    RunConfig cfg;
    if (j.contains("seed")) cfg.seed = j.at("seed").get<uint64_t>();

    if (j.contains("grid")) {
        const json& g = j.at("grid");
        cfg.solver.grid = Grid(g.at("n").get<int>(),
                               g.value("box_length", 2.0 * std::numbers::pi));
    }
    if (j.contains("solver")) {
        const json& s = j.at("solver");
        cfg.solver.dt = s.value("dt", cfg.solver.dt);
        cfg.solver.t_end = s.value("t_end", cfg.solver.t_end);
        cfg.solver.dealias = s.value("dealias", cfg.solver.dealias);
        cfg.solver.nonlinear = s.value("nonlinear", cfg.solver.nonlinear);
        cfg.solver.coupling = s.value("coupling", cfg.solver.coupling);
        cfg.solver.blowup_factor = s.value("blowup_factor", cfg.solver.blowup_factor);
        const std::string integrator = s.value("integrator", "ifrk4");
        if (integrator != "ifrk4")
            throw std::invalid_argument("solver.integrator: unknown scheme '" + integrator +
                                        "'");
        cfg.solver.integrator = Integrator::IFRK4;
        if (s.contains("cfl_cap")) {
            const double cap = s.at("cfl_cap").get<double>();
            cfg.solver.cfl_cap = cap > 0.0 ? std::optional<double>(cap) : std::nullopt;
        }
    }
    if (j.contains("initial")) {
        const json& i = j.at("initial");
        cfg.initial.kind = generator_kind_from_name(i.value("kind", "taylor_green"));
        cfg.initial.amplitude = i.value("amplitude", 1.0);
        cfg.initial.slope = i.value("slope", 2.0);
        cfg.initial.omega_amplitude = i.value("omega_amplitude", 0.0);
        if (i.contains("mode")) {
            const auto m = i.at("mode").get<std::vector<int>>();
            if (m.size() != 3)
                throw std::invalid_argument("initial.mode must have 3 entries");
            cfg.initial.mode = {m[0], m[1], m[2]};
        }
        cfg.initial.snapshot_path = i.value("path", std::string{});
    }
    if (j.contains("monitor")) {
        const json& m = j.at("monitor");
        cfg.monitor.cadence = m.value("cadence", 10);
        if (m.contains("r")) cfg.monitor.r_values = m.at("r").get<std::vector<double>>();
        cfg.monitor.gronwall_constant = m.value("gronwall_constant", 1.0);
        cfg.monitor.estimates = m.value("estimates", true);
        cfg.monitor.morrey.center_stride = m.value("morrey_stride", 4);
        cfg.monitor.morrey.min_radius_cells = m.value("morrey_min_radius_cells", 2);
        if (m.contains("serrin_pairs")) {
            cfg.monitor.serrin_pairs.clear();
            for (const json& p : m.at("serrin_pairs")) {
                if (!p.is_array() || p.size() != 2)
                    throw std::invalid_argument("serrin_pairs entries must be [alpha, beta]");
                SerrinPair sp;
                sp.alpha = number_or_inf(p[0], "serrin alpha");
                sp.beta = number_or_inf(p[1], "serrin beta");
                cfg.monitor.serrin_pairs.push_back(sp);
            }
        }
    }
    if (j.contains("output")) {
        const json& o = j.at("output");
        cfg.output.directory = o.value("directory", cfg.output.directory);
        cfg.output.csv = o.value("csv", true);
        cfg.output.jsonl = o.value("jsonl", true);
        cfg.output.snapshot = o.value("snapshot", true);
    }
    cfg.validate();
    return cfg;
}

}  // namespace

void RunConfig::validate() const {
    solver.validate();
    monitor.validate();
    if (initial.kind == GeneratorKind::SnapshotFile && initial.snapshot_path.empty())
        throw std::invalid_argument("RunConfig: snapshot generator needs a path");
    if (output.directory.empty())
        throw std::invalid_argument("RunConfig: output directory must not be empty");
}

RunConfig parse_run_config_json(const std::string& text) {
    return from_json_tree(json::parse(text));
}

RunConfig parse_run_config_toml(const std::string& text) {
    return from_json_tree(detail::toml_lite_parse(text));
}

RunConfig parse_run_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".toml")
        return parse_run_config_toml(text);
    return parse_run_config_json(text);
}

std::string run_config_to_json(const RunConfig& cfg) {
    json j;
    j["seed"] = cfg.seed;
    j["grid"] = {{"n", cfg.solver.grid.n}, {"box_length", cfg.solver.grid.box_length}};
    json s = {{"dt", cfg.solver.dt},
              {"t_end", cfg.solver.t_end},
              {"dealias", cfg.solver.dealias},
              {"nonlinear", cfg.solver.nonlinear},
              {"coupling", cfg.solver.coupling},
              {"blowup_factor", cfg.solver.blowup_factor}};
    s["cfl_cap"] = cfg.solver.cfl_cap ? json(*cfg.solver.cfl_cap) : json(0.0);
    j["solver"] = s;
    json i = {{"kind", generator_kind_name(cfg.initial.kind)},
              {"amplitude", cfg.initial.amplitude},
              {"slope", cfg.initial.slope},
              {"mode", {cfg.initial.mode[0], cfg.initial.mode[1], cfg.initial.mode[2]}},
              {"omega_amplitude", cfg.initial.omega_amplitude}};
    if (!cfg.initial.snapshot_path.empty()) i["path"] = cfg.initial.snapshot_path;
    j["initial"] = i;
    json pairs = json::array();
    for (const SerrinPair& p : cfg.monitor.serrin_pairs) {
        json alpha = std::isinf(p.alpha) ? json("inf") : json(p.alpha);
        pairs.push_back({alpha, p.beta});
    }
    j["monitor"] = {{"cadence", cfg.monitor.cadence},
                    {"r", cfg.monitor.r_values},
                    {"serrin_pairs", pairs},
                    {"gronwall_constant", cfg.monitor.gronwall_constant},
                    {"estimates", cfg.monitor.estimates},
                    {"morrey_stride", cfg.monitor.morrey.center_stride},
                    {"morrey_min_radius_cells", cfg.monitor.morrey.min_radius_cells}};
    j["output"] = {{"directory", cfg.output.directory},
                   {"csv", cfg.output.csv},
                   {"jsonl", cfg.output.jsonl},
                   {"snapshot", cfg.output.snapshot}};
    return j.dump(2);
}

}  // namespace mpns
