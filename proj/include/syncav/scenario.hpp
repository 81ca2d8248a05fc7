#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "syncav/diagnostics.hpp"
#include "syncav/measures.hpp"
#include "syncav/report.hpp"

namespace syncav {

// Parsed scenario configuration. Raw preset/scenario parameter objects are
// kept as JSON; scenarios pull what they need with validated defaults.
struct ScenarioConfig {
  std::string preset;
  nlohmann::ordered_json preset_params;
  nlohmann::ordered_json base_override;  // optional base descriptor
  std::string scenario;
  nlohmann::ordered_json params;
  nlohmann::ordered_json verdicts;       // "<observed>_<max|min|exact>": threshold
  std::vector<std::uint64_t> seeds;
  std::string out_dir = "out";
};

ScenarioConfig parse_config(const nlohmann::ordered_json& doc);
ScenarioConfig load_config_file(const std::string& path);

struct ScenarioOutcome {
  DiagnosticsReport report;
  // extra atom-list exports written next to report.csv as atoms_<name>.csv
  std::vector<std::pair<std::string, EmpiricalMeasure>> exports;
};

// Runs the named scenario. Throws ConfigError for bad configs and
// PreconditionError when the system does not meet the scenario's
// requirements. Output is a pure function of (config, seeds).
ScenarioOutcome run_scenario(const ScenarioConfig& config);

// Writes report.csv, verdicts.json, and any exports into out_dir.
void write_outputs(const ScenarioOutcome& outcome, const std::string& out_dir);

// Sorted text listing of presets and scenarios with parameter schemas.
std::string list_presets_text();

const std::vector<std::string>& scenario_names();

}  // namespace syncav
