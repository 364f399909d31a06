#pragma once

#include <json.hpp>
#include <string>

namespace mpns::detail {

/// Minimal TOML reader covering the config subset: [section] and
/// [dotted.section] headers, `key = value` with strings, booleans, numbers
/// (including inf), and (nested) arrays; `#` comments.  Produces the same
/// nlohmann::json tree as the JSON config path.
nlohmann::json toml_lite_parse(const std::string& text);

}  // namespace mpns::detail
