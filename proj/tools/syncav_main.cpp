// Scenario runner: `syncav run <config.json>` executes a configured
// scenario and writes report.csv + verdicts.json; `syncav list` prints the
// preset and scenario registry.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "syncav/errors.hpp"
#include "syncav/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"random products of maps: synchronization diagnostics"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::int64_t seed_override = -1;

  auto* run = app.add_subcommand("run", "run a scenario from a JSON config");
  run->add_option("config", config_path, "scenario config file")->required();
  run->add_option("--out", out_dir, "output directory (overrides config)");
  run->add_option("--seed-override", seed_override, "replace the config seed list");

  auto* list = app.add_subcommand("list", "list presets and scenarios");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    std::cout << syncav::list_presets_text();
    return 0;
  }

  try {
    syncav::ScenarioConfig cfg = syncav::load_config_file(config_path);
    if (seed_override >= 0)
      cfg.seeds = {static_cast<std::uint64_t>(seed_override)};
    if (!out_dir.empty()) cfg.out_dir = out_dir;

    const syncav::ScenarioOutcome outcome = syncav::run_scenario(cfg);
    syncav::write_outputs(outcome, cfg.out_dir);

    int failed = 0;
    for (const auto& v : outcome.report.verdicts) {
      std::cout << (v.pass ? "[pass] " : "[FAIL] ") << v.property
                << "  observed=" << syncav::format_full(v.observed)
                << " threshold=" << syncav::format_full(v.threshold) << '\n';
      failed += v.pass ? 0 : 1;
    }
    std::cout << "report written to " << cfg.out_dir << '\n';
    return failed == 0 ? 0 : 1;
  } catch (const syncav::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const syncav::PreconditionError& e) {
    std::cerr << "scenario precondition failed: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
