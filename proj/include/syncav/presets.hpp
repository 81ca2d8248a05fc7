#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "syncav/product.hpp"

namespace syncav {

struct PresetInfo {
  std::string name;
  std::string description;
  std::string params_schema;  // human-readable parameter summary
};

// Registry is sorted by name and stable across runs.
const std::vector<PresetInfo>& preset_registry();

// Builds a preset system; `params` may override preset defaults.
// Throws ConfigError naming the offending field.
RandomProduct build_preset(const std::string& name, const nlohmann::json& params);

}  // namespace syncav
