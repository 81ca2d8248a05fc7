#include "syncav/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "syncav/errors.hpp"
#include "syncav/presets.hpp"
#include "syncav/rng.hpp"

namespace syncav {

namespace {

using nlohmann::ordered_json;

// Observed quantities a scenario produced, in a stable order.
using Observations = std::vector<std::pair<std::string, double>>;

double get_number(const ordered_json& params, const std::string& key, double fallback) {
  if (!params.contains(key)) return fallback;
  const auto& v = params[key];
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>()).to_double();
    } catch (const std::exception& e) {
      throw ConfigError(key, e.what());
    }
  }
  throw ConfigError(key, "expected a number");
}

std::int64_t get_int(const ordered_json& params, const std::string& key,
                     std::int64_t fallback) {
  if (!params.contains(key)) return fallback;
  if (!params[key].is_number_integer()) throw ConfigError(key, "expected an integer");
  return params[key].get<std::int64_t>();
}

// Points may be numbers (continuum spaces) or labels (finite spaces).
double parse_point(const MetricSpace& space, const ordered_json& v,
                   const std::string& field) {
  double p = 0.0;
  if (v.is_string() && space.is_finite()) {
    try {
      p = static_cast<double>(space.index_of(v.get<std::string>()));
    } catch (const std::exception& e) {
      throw ConfigError(field, e.what());
    }
  } else if (v.is_number()) {
    p = v.get<double>();
  } else {
    throw ConfigError(field, "expected a point (number or label)");
  }
  if (!space.contains(p)) throw ConfigError(field, "point outside the space");
  return p;
}

std::vector<double> default_probes(const MetricSpace& space) {
  switch (space.kind()) {
    case MetricSpace::Kind::Interval:
      return {0.0, 0.5, 1.0};
    case MetricSpace::Kind::Circle:
      return {0.0, 0.25, 0.5};
    case MetricSpace::Kind::FiniteDiscrete:
      return space.epsilon_net(1.0);
  }
  return {0.0};
}

std::vector<std::int64_t> power_checkpoints(std::int64_t n) {
  std::vector<std::int64_t> cps;
  for (std::int64_t c = 1; c < n; c *= 2) cps.push_back(c);
  cps.push_back(n);
  return cps;
}

BaseSystem base_from_descriptor(const ordered_json& b) {
  const std::string kind = b.value("kind", "");
  std::vector<std::string> alphabet;
  if (b.contains("alphabet"))
    for (const auto& s : b["alphabet"]) alphabet.push_back(s.get<std::string>());

  if (kind == "two-sided-bernoulli" || kind == "one-sided-bernoulli") {
    if (!b.contains("weights")) throw ConfigError("weights", "missing weight vector");
    std::vector<Rational> weights;
    for (const auto& w : b["weights"]) {
      try {
        weights.push_back(w.is_number_integer() ? Rational(w.get<std::int64_t>())
                                                : Rational::parse(w.get<std::string>()));
      } catch (const std::exception& e) {
        throw ConfigError("weights", e.what());
      }
    }
    try {
      return BaseSystem::bernoulli(kind == "two-sided-bernoulli", std::move(weights),
                                   std::move(alphabet));
    } catch (const std::exception& e) {
      throw ConfigError("weights", e.what());
    }
  }
  if (kind == "markov-shift") {
    if (!b.contains("matrix")) throw ConfigError("matrix", "missing transition matrix");
    std::vector<std::vector<double>> matrix;
    for (const auto& row : b["matrix"]) {
      std::vector<double> r;
      for (const auto& v : row) r.push_back(v.get<double>());
      matrix.push_back(std::move(r));
    }
    try {
      return BaseSystem::markov(std::move(matrix), std::move(alphabet));
    } catch (const std::exception& e) {
      throw ConfigError("matrix", e.what());
    }
  }
  if (kind == "finite-permutation") {
    if (!b.contains("permutation"))
      throw ConfigError("permutation", "missing permutation table");
    std::vector<int> perm;
    for (const auto& v : b["permutation"]) perm.push_back(v.get<int>());
    try {
      return BaseSystem::finite_permutation(std::move(perm), std::move(alphabet));
    } catch (const std::exception& e) {
      throw ConfigError("permutation", e.what());
    }
  }
  throw ConfigError("base.kind", "unknown base kind '" + kind + "'");
}

RandomProduct build_system(const ScenarioConfig& cfg) {
  RandomProduct rp = build_preset(cfg.preset, cfg.preset_params);
  if (cfg.base_override.is_null() || cfg.base_override.empty()) return rp;
  BaseSystem base = base_from_descriptor(cfg.base_override);
  try {
    return RandomProduct(std::move(base), rp.fibers());
  } catch (const std::exception& e) {
    throw ConfigError("base", e.what());
  }
}

void apply_verdicts(const ordered_json& requested, const Observations& observed,
                    DiagnosticsReport& report) {
  const auto lookup = [&](const std::string& name) -> double {
    for (const auto& [key, value] : observed)
      if (key == name) return value;
    std::string known;
    for (const auto& [key, value] : observed) known += " " + key;
    throw ConfigError("verdicts", "unknown observed quantity '" + name +
                                      "'; available:" + known);
  };
  for (const auto& [key, thr] : requested.items()) {
    if (!thr.is_number())
      throw ConfigError("verdicts", "threshold for '" + key + "' must be a number");
    const double threshold = thr.get<double>();
    Verdict v;
    v.property = key;
    v.threshold = threshold;
    if (key.ends_with("_max")) {
      v.observed = lookup(key.substr(0, key.size() - 4));
      v.pass = v.observed <= threshold;
    } else if (key.ends_with("_min")) {
      v.observed = lookup(key.substr(0, key.size() - 4));
      v.pass = v.observed >= threshold;
    } else if (key.ends_with("_exact")) {
      v.observed = lookup(key.substr(0, key.size() - 6));
      v.pass = v.observed == threshold;
    } else {
      throw ConfigError("verdicts",
                        "verdict '" + key + "' must end in _max, _min, or _exact");
    }
    report.verdicts.push_back(std::move(v));
  }
}

// ---------------------------------------------------------------- sync ----

ScenarioOutcome run_sync(const RandomProduct& rp, const ScenarioConfig& cfg) {
  const auto n = get_int(cfg.params, "n", 1000);
  const double eps = get_number(cfg.params, "epsilon", 0.25);
  if (n < 1) throw ConfigError("n", "must be >= 1");
  const double x = cfg.params.contains("x")
                       ? parse_point(rp.space(), cfg.params["x"], "x")
                       : 0.0;
  const double y = cfg.params.contains("y")
                       ? parse_point(rp.space(), cfg.params["y"], "y")
                       : rp.space().is_finite()
                             ? static_cast<double>(rp.space().point_count() - 1)
                             : 1.0 - (rp.space().kind() == MetricSpace::Kind::Circle ? 0.5 : 0.0);

  const auto checkpoints = power_checkpoints(n);
  ScenarioOutcome out;
  out.report.rows.resize(checkpoints.size());
  for (std::size_t c = 0; c < checkpoints.size(); ++c)
    out.report.rows[c].n = checkpoints[c];

  double sync_worst = 0.0, sync_best = 1e300, profile_final = 0.0, profile_range = 0.0;
  for (const std::uint64_t seed : cfg.seeds) {
    const SymbolPath path = rp.base().sample_path(seed);
    const double s = sync_average(rp, path, x, y, n);
    sync_worst = std::max(sync_worst, s);
    sync_best = std::min(sync_best, s);
    const auto curve = strong_sync_profile_curve(rp, path, eps, checkpoints);
    const auto [lo, hi] = std::minmax_element(curve.begin(), curve.end());
    profile_final = std::max(profile_final, curve.back());
    profile_range = std::max(profile_range, *hi - *lo);
    for (std::size_t c = 0; c < curve.size(); ++c)
      out.report.rows[c].sync_max =
          std::isnan(out.report.rows[c].sync_max)
              ? curve[c]
              : std::max(out.report.rows[c].sync_max, curve[c]);
  }

  const Observations obs = {
      {"sync_average_worst", sync_worst},
      {"sync_average_best", sync_best},
      {"profile_final", profile_final},
      {"profile_range", profile_range},
  };
  apply_verdicts(cfg.verdicts, obs, out.report);
  return out;
}

// ---------------------------------------------------------------- diam ----

ScenarioOutcome run_diam(const RandomProduct& rp, const ScenarioConfig& cfg) {
  const auto n_max = get_int(cfg.params, "n_max", 50);
  const double eps = get_number(cfg.params, "epsilon", 1e-3);
  if (n_max < 1) throw ConfigError("n_max", "must be >= 1");

  ScenarioOutcome out;
  const double slack =
      rp.fibers().exact_diameter_path() ? 0.0 : 2.0 * rp.space().diameter_bound() * eps;

  double h_monotone_violations = 0.0, cesaro_n_peak = 0.0;
  double g_range = 0.0, h_range = 0.0, cesaro_range = 0.0;
  double h_geometric_dev = 0.0, g_expected_dev = 0.0, h_expected_dev = 0.0,
         cesaro_expected_dev = 0.0, h_final = 0.0;
  const bool want_ratio = cfg.params.contains("h_ratio");
  const double h_ratio = get_number(cfg.params, "h_ratio", 0.5);
  const bool want_g = cfg.params.contains("expect_g");
  const double expect_g = get_number(cfg.params, "expect_g", 0.0);
  const bool want_h = cfg.params.contains("expect_h");
  const double expect_h = get_number(cfg.params, "expect_h", 0.0);
  const bool want_c = cfg.params.contains("expect_cesaro");
  const double expect_c = get_number(cfg.params, "expect_cesaro", 0.0);

  bool first = true;
  for (const std::uint64_t seed : cfg.seeds) {
    const SymbolPath path = rp.base().sample_path(seed);
    const auto rows = diameter_sequences(rp, path, n_max, eps);
    if (first) {
      out.report.rows = rows;
      first = false;
    }
    double g_lo = 1e300, g_hi = 0.0, h_lo = 1e300, h_hi = 0.0, c_lo = 1e300, c_hi = 0.0;
    for (const auto& row : rows) {
      g_lo = std::min(g_lo, row.g);
      g_hi = std::max(g_hi, row.g);
      c_lo = std::min(c_lo, row.cesaro_g);
      c_hi = std::max(c_hi, row.cesaro_g);
      cesaro_n_peak = std::max(cesaro_n_peak, row.cesaro_g * static_cast<double>(row.n));
      if (want_g) g_expected_dev = std::max(g_expected_dev, std::abs(row.g - expect_g));
      if (want_c)
        cesaro_expected_dev = std::max(cesaro_expected_dev, std::abs(row.cesaro_g - expect_c));
      if (!std::isnan(row.h)) {
        h_lo = std::min(h_lo, row.h);
        h_hi = std::max(h_hi, row.h);
        h_final = std::max(h_final, rows.back().h);
        if (want_ratio)
          h_geometric_dev = std::max(
              h_geometric_dev,
              std::abs(row.h - std::pow(h_ratio, static_cast<double>(row.n))));
        if (want_h) h_expected_dev = std::max(h_expected_dev, std::abs(row.h - expect_h));
      }
    }
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
      if (!std::isnan(rows[i].h) && rows[i + 1].h > rows[i].h + slack)
        h_monotone_violations += 1.0;
    g_range = std::max(g_range, g_hi - g_lo);
    if (h_hi >= h_lo) h_range = std::max(h_range, h_hi - h_lo);
    cesaro_range = std::max(cesaro_range, c_hi - c_lo);
  }

  Observations obs = {
      {"h_monotone_violations", h_monotone_violations},
      {"cesaro_n_peak", cesaro_n_peak},
      {"g_range", g_range},
      {"h_range", h_range},
      {"cesaro_range", cesaro_range},
      {"h_final", h_final},
  };
  if (want_ratio) obs.emplace_back("h_geometric_dev", h_geometric_dev);
  if (want_g) obs.emplace_back("g_expected_dev", g_expected_dev);
  if (want_h) obs.emplace_back("h_expected_dev", h_expected_dev);
  if (want_c) obs.emplace_back("cesaro_expected_dev", cesaro_expected_dev);
  apply_verdicts(cfg.verdicts, obs, out.report);
  return out;
}

// ------------------------------------------------------------ pullback ----

ScenarioOutcome run_pullback(const RandomProduct& rp, const ScenarioConfig& cfg) {
  if (!rp.base().invertible())
    throw PreconditionError("pullback scenario needs an invertible base");
  const double tol = get_number(cfg.params, "tol", 1e-6);
  const auto max_depth = get_int(cfg.params, "max_depth", 160);
  const auto initial_depth = get_int(cfg.params, "initial_depth", 5);
  const auto residual_depth = get_int(cfg.params, "residual_depth", 40);
  const auto steps = get_int(cfg.params, "steps", 10);
  const auto probes = default_probes(rp.space());

  ScenarioOutcome out;
  double converged = 0.0, gap_peak = 0.0, residual_peak = 0.0, past_ok = 0.0,
         depth_peak = 0.0;
  for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
    const std::uint64_t seed = cfg.seeds[i];
    const SymbolPath path = rp.base().sample_path(seed);
    const auto est =
        estimate_invariant_graph(rp, path, tol, max_depth, probes, initial_depth);
    converged += est.converged ? 1.0 : 0.0;
    gap_peak = std::max(gap_peak, est.cauchy_gap);
    depth_peak = std::max(depth_peak, static_cast<double>(est.depth));
    const double res = invariance_residual(rp, path, residual_depth, steps, probes.front());
    residual_peak = std::max(residual_peak, res);
    past_ok += past_dependence_check(rp, path, residual_depth, tol,
                                     derive_seed(seed, 0xF07), probes)
                   ? 1.0
                   : 0.0;
    ReportRow row;
    row.n = static_cast<std::int64_t>(i + 1);
    row.residual = res;
    row.h = est.cauchy_gap;
    out.report.rows.push_back(row);
  }
  const auto count = static_cast<double>(cfg.seeds.size());
  const Observations obs = {
      {"converged_fraction", converged / count},
      {"cauchy_gap_peak", gap_peak},
      {"residual_peak", residual_peak},
      {"past_dependence_fraction", past_ok / count},
      {"depth_peak", depth_peak},
  };
  apply_verdicts(cfg.verdicts, obs, out.report);
  return out;
}

// ------------------------------------------------------------- measure ----

ScenarioOutcome run_measure(const RandomProduct& rp, const ScenarioConfig& cfg) {
  const auto n = get_int(cfg.params, "n", 100000);
  if (n < 1) throw ConfigError("n", "must be >= 1");
  std::vector<double> starts;
  if (cfg.params.contains("starts")) {
    for (const auto& v : cfg.params["starts"])
      starts.push_back(parse_point(rp.space(), v, "starts"));
  } else {
    starts = rp.space().is_finite() ? std::vector<double>{0.0}
                                    : std::vector<double>{0.0, 1.0 - (rp.space().kind() ==
                                                                      MetricSpace::Kind::Circle
                                                                          ? 0.5
                                                                          : 0.0)};
  }
  const std::string reference = cfg.params.value("reference", "");
  const auto ref_atoms = get_int(cfg.params, "ref_atoms", 10000);
  const bool want_target = cfg.params.contains("d_target");
  const double d_target = get_number(cfg.params, "d_target", 0.0);

  std::optional<EmpiricalMeasure> ref;
  if (reference == "lebesgue-quantiles") {
    if (rp.space().kind() != MetricSpace::Kind::Interval)
      throw ConfigError("reference", "lebesgue-quantiles needs the unit interval");
    ref = EmpiricalMeasure::lebesgue_quantiles(static_cast<std::size_t>(ref_atoms));
  } else if (!reference.empty()) {
    throw ConfigError("reference", "unknown reference '" + reference + "'");
  }

  ScenarioOutcome out;
  double w1_between = 0.0, w1_ref = 0.0, d_peak = 0.0, d_low = 1e300, d_dev = 0.0;
  bool first_seed = true;
  for (const std::uint64_t seed : cfg.seeds) {
    const SymbolPath path = rp.base().sample_path(seed);
    std::vector<EmpiricalMeasure> marginals;
    marginals.reserve(starts.size());
    for (double x : starts)
      marginals.push_back(empirical_x_marginal(rp, path, x, n));
    for (std::size_t i = 0; i + 1 < marginals.size(); ++i)
      w1_between = std::max(w1_between, wasserstein1(marginals[i], marginals[i + 1]));
    if (ref)
      for (const auto& m : marginals)
        w1_ref = std::max(w1_ref, wasserstein1(m, *ref));
    const double d = d_functional(marginals.front());
    d_peak = std::max(d_peak, d);
    d_low = std::min(d_low, d);
    if (want_target) d_dev = std::max(d_dev, std::abs(d - d_target));
    if (first_seed) {
      for (std::size_t i = 0; i < marginals.size(); ++i)
        out.exports.emplace_back("start" + std::to_string(i),
                                 marginals[i].consolidated());
      first_seed = false;
    }
  }

  Observations obs = {
      {"w1_between_starts_peak", w1_between},
      {"d_functional_peak", d_peak},
      {"d_functional_low", d_low},
  };
  if (ref) obs.emplace_back("w1_to_reference_peak", w1_ref);
  if (want_target) obs.emplace_back("d_target_dev", d_dev);
  apply_verdicts(cfg.verdicts, obs, out.report);
  return out;
}

// ------------------------------------------------- vanishing-attractor ----

ScenarioOutcome run_vanishing(const RandomProduct& rp, const ScenarioConfig& cfg) {
  VanishingAttractorConfig vac;
  vac.n_two_sided = get_int(cfg.params, "n_two_sided", 10000);
  vac.n_one_sided = get_int(cfg.params, "n_one_sided", 100000);
  vac.depth = get_int(cfg.params, "depth", 60);
  vac.starts = static_cast<int>(get_int(cfg.params, "starts", 5));
  vac.max_window = static_cast<int>(get_int(cfg.params, "max_window", 3));
  vac.train_n = get_int(cfg.params, "train_n", 100000);

  ScenarioOutcome out;
  double two_sided_peak = 0.0, floor = 1e300;
  bool first = true;
  for (const std::uint64_t seed : cfg.seeds) {
    vac.seed = seed;
    const auto rep = vanishing_attractor_scenario(rp, vac);
    two_sided_peak = std::max(two_sided_peak, rep.two_sided_basin_max);
    floor = std::min(floor, rep.one_sided_floor);
    if (first) {
      for (std::size_t k = 0; k < rep.one_sided_basin.size(); ++k) {
        ReportRow row;
        row.n = static_cast<std::int64_t>(k);
        row.sync_max = rep.one_sided_basin[k];
        out.report.rows.push_back(row);
      }
      first = false;
    }
  }
  const Observations obs = {
      {"two_sided_basin_peak", two_sided_peak},
      {"one_sided_floor", floor},
  };
  apply_verdicts(cfg.verdicts, obs, out.report);
  return out;
}

// -------------------------------------------------------- property-suite --

ScenarioOutcome run_property_suite(const RandomProduct& rp, const ScenarioConfig& cfg) {
  const auto n_max = get_int(cfg.params, "n_max", 30);
  const double eps = get_number(cfg.params, "epsilon", 1e-3);
  const auto samples = static_cast<int>(get_int(cfg.params, "samples", 8));
  const auto res = property_suite(rp, cfg.seeds, n_max, eps, samples);

  ScenarioOutcome out;
  const Observations obs = {
      {"h_violations", static_cast<double>(res.h_violations)},
      {"g_violations", static_cast<double>(res.g_violations)},
      {"u_violations", static_cast<double>(res.u_violations)},
      {"max_excess", res.max_excess},
      {"checks_total",
       static_cast<double>(res.h_checks + res.g_checks + res.u_checks)},
  };
  apply_verdicts(cfg.verdicts, obs, out.report);
  return out;
}

// ---------------------------------------------------------- finite-exact --

ScenarioOutcome run_finite_exact(const RandomProduct& rp, const ScenarioConfig& cfg) {
  if (rp.base().kind() != BaseSystem::Kind::FinitePermutation || !rp.space().is_finite())
    throw PreconditionError("finite-exact scenario needs a finite system");
  const auto n = get_int(cfg.params, "n", 100);
  const double x = cfg.params.contains("x")
                       ? parse_point(rp.space(), cfg.params["x"], "x")
                       : 0.0;
  const double y = cfg.params.contains("y")
                       ? parse_point(rp.space(), cfg.params["y"], "y")
                       : static_cast<double>(rp.space().point_count() - 1);

  const auto set = finite_invariant_measures(rp);
  double atomic = 0.0, marginal_ok = 0.0;
  for (const auto& m : set.measures) {
    atomic += m.atomic_disintegration ? 1.0 : 0.0;
    marginal_ok += m.marginal_ok ? 1.0 : 0.0;
  }
  const auto count = static_cast<double>(set.measures.size());

  double sync_worst = 0.0, sync_best = 1e300;
  for (int w = 0; w < rp.base().alphabet_size(); ++w) {
    const SymbolPath path = rp.base().path_from_state(w);
    for (std::int64_t i = 1; i <= n; ++i) {
      const double s = sync_average(rp, path, x, y, i);
      sync_worst = std::max(sync_worst, s);
      sync_best = std::min(sync_best, s);
    }
  }

  ScenarioOutcome out;
  const Observations obs = {
      {"measure_count", count},
      {"atomic_fraction", atomic / count},
      {"marginal_ok_fraction", marginal_ok / count},
      {"strong_sync", finite_strongly_sync_on_average(rp) ? 1.0 : 0.0},
      {"sync_average_worst", sync_worst},
      {"sync_average_best", sync_best},
  };
  apply_verdicts(cfg.verdicts, obs, out.report);
  return out;
}

}  // namespace

ScenarioConfig parse_config(const ordered_json& doc) {
  ScenarioConfig cfg;
  if (!doc.contains("preset") || !doc["preset"].is_string())
    throw ConfigError("preset", "missing preset name");
  cfg.preset = doc["preset"].get<std::string>();
  bool known = false;
  for (const auto& p : preset_registry()) known = known || p.name == cfg.preset;
  if (!known) throw ConfigError("preset", "unknown preset '" + cfg.preset + "'");

  if (!doc.contains("scenario") || !doc["scenario"].is_string())
    throw ConfigError("scenario", "missing scenario name");
  cfg.scenario = doc["scenario"].get<std::string>();
  const auto& names = scenario_names();
  if (std::find(names.begin(), names.end(), cfg.scenario) == names.end())
    throw ConfigError("scenario", "unknown scenario '" + cfg.scenario + "'");

  cfg.preset_params = doc.value("preset_params", ordered_json::object());
  cfg.base_override = doc.value("base", ordered_json::object());
  cfg.params = doc.value("params", ordered_json::object());
  cfg.verdicts = doc.value("verdicts", ordered_json::object());
  cfg.out_dir = doc.value("out", "out");

  if (cfg.params.contains("seeds")) {
    if (!cfg.params["seeds"].is_array() || cfg.params["seeds"].empty())
      throw ConfigError("seeds", "expected a nonempty integer array");
    for (const auto& s : cfg.params["seeds"]) {
      if (!s.is_number_integer()) throw ConfigError("seeds", "expected integers");
      cfg.seeds.push_back(s.get<std::uint64_t>());
    }
  } else {
    cfg.seeds = {1};
  }
  return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  ordered_json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ConfigError("config", std::string("JSON parse error: ") + e.what());
  }
  return parse_config(doc);
}

ScenarioOutcome run_scenario(const ScenarioConfig& config) {
  const RandomProduct rp = build_system(config);
  ScenarioOutcome out;
  if (config.scenario == "sync") {
    out = run_sync(rp, config);
  } else if (config.scenario == "diam") {
    out = run_diam(rp, config);
  } else if (config.scenario == "pullback") {
    out = run_pullback(rp, config);
  } else if (config.scenario == "measure") {
    out = run_measure(rp, config);
  } else if (config.scenario == "vanishing-attractor") {
    out = run_vanishing(rp, config);
  } else if (config.scenario == "property-suite") {
    out = run_property_suite(rp, config);
  } else if (config.scenario == "finite-exact") {
    out = run_finite_exact(rp, config);
  } else {
    throw ConfigError("scenario", "unknown scenario '" + config.scenario + "'");
  }
  out.report.preset = config.preset;
  out.report.scenario = config.scenario;
  out.report.seeds = config.seeds;
  out.report.epsilon = get_number(config.params, "epsilon", 0.0);
  out.report.n_max = get_int(config.params, "n_max", 0);
  return out;
}

void write_outputs(const ScenarioOutcome& outcome, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_report_csv(outcome.report, out_dir + "/report.csv");
  write_verdicts_json(outcome.report, out_dir + "/verdicts.json");
  for (const auto& [name, measure] : outcome.exports)
    write_atoms_csv(measure, out_dir + "/atoms_" + name + ".csv");
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {
      "diam",    "finite-exact", "measure", "property-suite",
      "pullback", "sync",        "vanishing-attractor",
  };
  return names;
}

std::string list_presets_text() {
  std::ostringstream out;
  out << "presets:\n";
  for (const auto& p : preset_registry()) {
    out << "  " << p.name << "\n    " << p.description << "\n    params: "
        << p.params_schema << "\n";
  }
  out << "scenarios:\n";
  for (const auto& s : scenario_names()) out << "  " << s << "\n";
  return out.str();
}

}  // namespace syncav
