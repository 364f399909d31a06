#include <json.hpp>

#include "mpns/checks.hpp"
#include "mpns/norms.hpp"

namespace mpns {

std::string NormReport::to_json_line() const {
    nlohmann::json j;
    j["kind"] = norm_kind_name(kind);
    nlohmann::json pj = nlohmann::json::object();
    for (const auto& [name, value] : params) pj[name] = value;
    j["params"] = pj;
    j["value"] = value;
    j["grid"] = {{"n", grid.n}, {"box_length", grid.box_length}};
    return j.dump();
}

std::string InequalityCheck::to_json_line() const {
    nlohmann::json j;
    j["name"] = name;
    j["lhs"] = lhs;
    j["rhs"] = rhs_without_constant;
    j["ratio"] = observed_ratio;
    j["seed"] = seed;
    if (!sample.empty()) j["sample"] = sample;
    return j.dump();
}

}  // namespace mpns
