#include "syncav/presets.hpp"

#include <algorithm>

#include "syncav/errors.hpp"

namespace syncav {

namespace {

using nlohmann::json;

std::vector<Rational> parse_rationals(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw ConfigError(field, "expected a nonempty array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    try {
      if (item.is_number_integer()) {
        out.push_back(Rational(item.get<std::int64_t>()));
      } else if (item.is_string()) {
        out.push_back(Rational::parse(item.get<std::string>()));
      } else {
        throw std::invalid_argument("weights must be integers or \"p/q\" strings");
      }
    } catch (const std::exception& e) {
      throw ConfigError(field, e.what());
    }
  }
  return out;
}

std::vector<Rational> weights_or_uniform(const json& params, std::size_t count) {
  if (params.contains("weights")) return parse_rationals(params["weights"], "weights");
  return std::vector<Rational>(count, Rational(1, static_cast<std::int64_t>(count)));
}

BaseSystem bernoulli_base(const json& params, std::size_t symbols) {
  const bool two_sided = params.value("two_sided", true);
  auto weights = weights_or_uniform(params, symbols);
  if (weights.size() != symbols)
    throw ConfigError("weights", "weight count does not match the fiber family");
  try {
    return BaseSystem::bernoulli(two_sided, std::move(weights));
  } catch (const std::exception& e) {
    throw ConfigError("weights", e.what());
  }
}

std::vector<double> parse_doubles(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw ConfigError(field, "expected a nonempty numeric array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_string()) {
      try {
        out.push_back(Rational::parse(item.get<std::string>()).to_double());
      } catch (const std::exception& e) {
        throw ConfigError(field, e.what());
      }
    } else if (item.is_number()) {
      out.push_back(item.get<double>());
    } else {
      throw ConfigError(field, "expected numbers or \"p/q\" strings");
    }
  }
  return out;
}

RandomProduct build_halving(const json& params) {
  FiberFamily fibers = FiberFamily::affine({0.5, 0.5}, {0.0, 0.5});
  return RandomProduct(bernoulli_base(params, 2), std::move(fibers));
}

RandomProduct build_affine(const json& params) {
  if (!params.contains("slope") || !params.contains("offset"))
    throw ConfigError("preset_params", "affine-ifs needs 'slope' and 'offset' arrays");
  auto slope = parse_doubles(params["slope"], "slope");
  auto offset = parse_doubles(params["offset"], "offset");
  FiberFamily fibers = [&] {
    try {
      return FiberFamily::affine(std::move(slope), std::move(offset));
    } catch (const std::exception& e) {
      throw ConfigError("slope", e.what());
    }
  }();
  const auto symbols = static_cast<std::size_t>(fibers.symbol_count());
  return RandomProduct(bernoulli_base(params, symbols), std::move(fibers));
}

RandomProduct build_rotations(const json& params) {
  std::vector<double> angles = {0.25, 0.375};  // dyadic: circle steps stay exact
  if (params.contains("angles")) angles = parse_doubles(params["angles"], "angles");
  FiberFamily fibers = [&] {
    try {
      return FiberFamily::rotations(std::move(angles));
    } catch (const std::exception& e) {
      throw ConfigError("angles", e.what());
    }
  }();
  const auto symbols = static_cast<std::size_t>(fibers.symbol_count());
  return RandomProduct(bernoulli_base(params, symbols), std::move(fibers));
}

RandomProduct build_identity_interval(const json& params) {
  FiberFamily fibers = FiberFamily::affine({1.0, 1.0}, {0.0, 0.0});
  return RandomProduct(bernoulli_base(params, 2), std::move(fibers));
}

RandomProduct build_example_2_1(const json&) {
  MetricSpace space = MetricSpace::finite({"1", "2"});
  // State 1 swaps the fiber, state 2 leaves it alone; the base swaps states.
  FiberFamily fibers = FiberFamily::finite_table(std::move(space), {{1, 0}, {0, 1}});
  BaseSystem base = BaseSystem::finite_permutation({1, 0}, {"1", "2"});
  return RandomProduct(std::move(base), std::move(fibers));
}

RandomProduct build_identity_finite(const json&) {
  MetricSpace space = MetricSpace::finite({"a", "b"});
  FiberFamily fibers = FiberFamily::finite_table(std::move(space), {{0, 1}, {0, 1}});
  BaseSystem base = BaseSystem::finite_permutation({0, 1}, {"1", "2"});
  return RandomProduct(std::move(base), std::move(fibers));
}

RandomProduct build_constant_finite(const json&) {
  MetricSpace space = MetricSpace::finite({"a", "b"});
  FiberFamily fibers = FiberFamily::finite_table(std::move(space), {{0, 0}, {0, 0}});
  BaseSystem base = BaseSystem::finite_permutation({1, 0}, {"1", "2"});
  return RandomProduct(std::move(base), std::move(fibers));
}

RandomProduct build_finite_table(const json& params) {
  if (!params.contains("points") || !params.contains("table") ||
      !params.contains("permutation"))
    throw ConfigError("preset_params",
                      "finite-table needs 'points', 'table', and 'permutation'");
  std::vector<std::string> labels;
  for (const auto& p : params["points"]) {
    if (!p.is_string()) throw ConfigError("points", "expected labels");
    labels.push_back(p.get<std::string>());
  }
  MetricSpace space = [&]() -> MetricSpace {
    try {
      if (params.contains("metric")) {
        std::vector<std::vector<double>> metric;
        for (const auto& row : params["metric"])
          metric.push_back(parse_doubles(row, "metric"));
        return MetricSpace::finite(labels, std::move(metric));
      }
      return MetricSpace::finite(labels);
    } catch (const std::exception& e) {
      throw ConfigError("metric", e.what());
    }
  }();
  if (!params["table"].is_array())
    throw ConfigError("table", "expected an array of rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : params["table"]) {
    if (!row.is_array()) throw ConfigError("table", "expected an array of rows");
    std::vector<int> r;
    for (const auto& v : row) {
      if (v.is_string()) {
        try {
          r.push_back(space.index_of(v.get<std::string>()));
        } catch (const std::exception& e) {
          throw ConfigError("table", e.what());
        }
      } else if (v.is_number_integer()) {
        r.push_back(v.get<int>());
      } else {
        throw ConfigError("table", "expected point labels or indices");
      }
    }
    table.push_back(std::move(r));
  }
  std::vector<int> perm;
  for (const auto& v : params["permutation"]) {
    if (!v.is_number_integer()) throw ConfigError("permutation", "expected indices");
    perm.push_back(v.get<int>());
  }
  FiberFamily fibers = [&] {
    try {
      return FiberFamily::finite_table(std::move(space), std::move(table));
    } catch (const std::exception& e) {
      throw ConfigError("table", e.what());
    }
  }();
  BaseSystem base = [&] {
    try {
      return BaseSystem::finite_permutation(std::move(perm));
    } catch (const std::exception& e) {
      throw ConfigError("permutation", e.what());
    }
  }();
  if (base.alphabet_size() != fibers.symbol_count())
    throw ConfigError("table", "fiber table rows do not match the permutation size");
  return RandomProduct(std::move(base), std::move(fibers));
}

}  // namespace

const std::vector<PresetInfo>& preset_registry() {
  static const std::vector<PresetInfo> registry = [] {
    std::vector<PresetInfo> r = {
        {"affine-ifs",
         "affine maps a_s x + b_s on [0,1] over a Bernoulli shift",
         "slope: number[], offset: number[], weights?: rational[], two_sided?: bool"},
        {"circle-rotations",
         "rotations x + alpha_s mod 1; isometric negative control",
         "angles?: number[] (default dyadic [1/4, 3/8]), weights?: rational[], two_sided?: bool"},
        {"constant-finite",
         "two constant fiber maps on a two-point space; unique Dirac-fibered measure",
         "(no parameters)"},
        {"example-2-1",
         "swap/identity pair on {1,2} over the period-2 base; unique measure, never synchronizes",
         "(no parameters)"},
        {"finite-table",
         "user-defined fiber tables on a finite space over a finite permutation base",
         "points: label[], table: int[][], permutation: int[], metric?: matrix"},
        {"halving-ifs",
         "f_s(x) = (x+s)/2 on [0,1] over Bernoulli(1/2,1/2); synchronizing prototype",
         "weights?: rational[], two_sided?: bool"},
        {"identity-finite",
         "identity fibers on a two-point space over the identity base; many invariant measures",
         "(no parameters)"},
        {"identity-interval",
         "identity fibers on [0,1]; nothing contracts, nothing synchronizes",
         "weights?: rational[], two_sided?: bool"},
    };
    std::sort(r.begin(), r.end(),
              [](const PresetInfo& a, const PresetInfo& b) { return a.name < b.name; });
    return r;
  }();
  return registry;
}

RandomProduct build_preset(const std::string& name, const nlohmann::json& raw_params) {
  const nlohmann::json params =
      raw_params.is_null() ? nlohmann::json::object() : raw_params;
  if (name == "halving-ifs") return build_halving(params);
  if (name == "affine-ifs") return build_affine(params);
  if (name == "circle-rotations") return build_rotations(params);
  if (name == "identity-interval") return build_identity_interval(params);
  if (name == "example-2-1") return build_example_2_1(params);
  if (name == "identity-finite") return build_identity_finite(params);
  if (name == "constant-finite") return build_constant_finite(params);
  if (name == "finite-table") return build_finite_table(params);
  throw ConfigError("preset", "unknown preset '" + name + "'");
}

}  // namespace syncav
