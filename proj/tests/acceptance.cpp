// Acceptance suite: one criterion per section, one pass/fail line each.
// Every tolerance is written out literally next to the check it gates.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "syncav/diagnostics.hpp"
#include "syncav/measures.hpp"
#include "syncav/presets.hpp"
#include "syncav/rng.hpp"

using namespace syncav;

namespace {

int failures = 0;

struct Criterion {
  explicit Criterion(int id, std::string title)
      : id(id), title(std::move(title)), start(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& detail) {
    if (!ok) {
      all_ok = false;
      if (first_failure.empty()) first_failure = detail;
    }
  }

  void note(const std::string& label, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " %s=%.3g", label.c_str(), value);
    info += buf;
  }

  void finish(double runtime_budget_s = 0.0) {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (runtime_budget_s > 0.0 && elapsed >= runtime_budget_s) {
      all_ok = false;
      if (first_failure.empty())
        first_failure = "runtime " + std::to_string(elapsed) + "s exceeds budget";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s%s\n", all_ok ? "PASS" : "FAIL", id,
                title.c_str(), elapsed, info.c_str(),
                first_failure.empty() ? "" : " -- ", first_failure.c_str());
    failures += all_ok ? 0 : 1;
  }

  int id;
  std::string title;
  std::chrono::steady_clock::time_point start;
  bool all_ok = true;
  std::string first_failure;
  std::string info;
};

std::vector<std::uint64_t> seed_range(int count) {
  std::vector<std::uint64_t> seeds;
  for (int s = 1; s <= count; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
  return seeds;
}

void criterion_1_finite_exactness() {
  Criterion c(1, "swap/identity system: unique non-Dirac measure, no synchronization");
  const auto ex = build_preset("example-2-1", {});

  const auto set = finite_invariant_measures(ex);
  c.require(set.measures.size() == 1, "expected exactly one invariant measure");
  if (set.measures.size() == 1) {
    const auto& m = set.measures[0];
    for (int w = 0; w < 2; ++w)
      for (int x = 0; x < 2; ++x)
        c.require(m.weight[w][x] == Rational(1, 4),
                  "measure is not uniform on the 4-cycle");
    c.require(!m.atomic_disintegration, "conditionals must not be Dirac");
    c.require(m.marginal_ok, "base marginal mismatch");
  }
  for (int w = 0; w < 2; ++w) {
    const auto path = ex.base().path_from_state(w);
    for (std::int64_t n = 1; n <= 100; ++n)
      c.require(sync_average(ex, path, 0.0, 1.0, n) == 1.0,
                "sync average must equal 1 exactly at n=" + std::to_string(n));
  }
  c.finish(1.0);
}

void criterion_2_diameter_equivalence() {
  Criterion c(2, "halving family: h_n = 2^-n and n*cesaro_g <= 2; flat negative control");
  const auto rp = build_preset("halving-ifs", {});
  const auto rows = diameter_sequences(rp, rp.base().sample_path(1), 1000, 1e-3);
  for (const auto& row : rows) {
    const double expect = std::pow(0.5, static_cast<double>(row.n));
    c.require(std::abs(row.h - expect) <= 1e-12,
              "h_" + std::to_string(row.n) + " deviates from 2^-n beyond 1e-12");
    c.require(row.cesaro_g * static_cast<double>(row.n) <= 2.0,
              "cesaro_g exceeds 2/n at n=" + std::to_string(row.n));
  }

  const auto ex = build_preset("example-2-1", {});
  for (int w = 0; w < 2; ++w) {
    const auto ex_rows = diameter_sequences(ex, ex.base().path_from_state(w), 1000, 0.5);
    for (const auto& row : ex_rows) {
      c.require(row.h == 1.0, "control h must equal 1 exactly");
      c.require(row.cesaro_g == 1.0, "control cesaro must equal 1 exactly");
    }
  }
  c.finish(5.0);
}

void criterion_3_attracting_graph() {
  Criterion c(3, "halving family: pullback graph converges, is invariant, and attracts");
  const auto rp = build_preset("halving-ifs", {});
  const double gap_tol = std::pow(2.0, -40.0);
  const double residual_tol = std::pow(2.0, -39.0);
  const std::vector<double> probes = {0.0, 0.5, 1.0};

  const auto seeds = seed_range(50);
  std::vector<std::string> seed_errors(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(seeds.size()); ++i) {
    const auto seed = seeds[static_cast<std::size_t>(i)];
    std::string err;
    const auto path = rp.base().sample_path(seed);
    const auto est = estimate_invariant_graph(rp, path, gap_tol, 160, probes, 5,
                                              kernels::Exec::Serial);
    if (!est.converged) err = "graph estimate did not converge";
    if (err.empty() && est.depth != 40) err = "expected the gap check at depth 40";
    if (err.empty() && !(est.cauchy_gap <= gap_tol)) err = "cauchy gap above 2^-40";
    if (err.empty() && !(invariance_residual(rp, path, 40, 10, 0.0) <= residual_tol))
      err = "invariance residual above 2^-39";
    if (err.empty()) {
      const PathFunction graph = [&rp](const SymbolPath& w) {
        return rp.pullback_compose(w, 40, 0.0);
      };
      for (int s = 0; s < 10 && err.empty(); ++s) {
        const double x = unit_uniform(derive_seed(seed, 0xACC3), s);
        if (!(basin_average_distance(rp, path, x, graph, 10000) <= 1e-3))
          err = "basin average above 1e-3";
      }
    }
    seed_errors[static_cast<std::size_t>(i)] = err;
  }
  for (std::size_t i = 0; i < seeds.size(); ++i)
    c.require(seed_errors[i].empty(),
              "seed " + std::to_string(seeds[i]) + ": " + seed_errors[i]);
  c.finish(30.0);
}

void criterion_4_past_measurability() {
  Criterion c(4, "pullback graph survives 100/100 future rewrites bit-identically");
  const auto rp = build_preset("halving-ifs", {});
  int passes = 0;
  for (int t = 0; t < 100; ++t) {
    const auto path = rp.base().sample_path(derive_seed(0xFACE, t));
    passes += past_dependence_check(rp, path, 40, 1e-6, derive_seed(0xF00D, t),
                                    {0.0, 0.5, 1.0})
                  ? 1
                  : 0;
  }
  c.require(passes == 100, std::to_string(passes) + "/100 rewrites passed");
  c.finish();
}

void criterion_5_empirical_convergence() {
  Criterion c(5, "halving family: empirical marginals agree and D approaches 1/3");
  const auto rp = build_preset("halving-ifs", {});
  const auto path = rp.base().sample_path(1);
  const auto m0 = empirical_x_marginal(rp, path, 0.0, 100000);
  const auto m1 = empirical_x_marginal(rp, path, 1.0, 100000);
  const auto lebesgue = EmpiricalMeasure::lebesgue_quantiles(10000);

  const double between = wasserstein1(m0, m1);
  const double to_leb = std::max(wasserstein1(m0, lebesgue), wasserstein1(m1, lebesgue));
  const double d_val = d_functional(m0);
  c.require(between <= 0.02, "marginals from 0 and 1 differ beyond 0.02");
  c.require(to_leb <= 0.03, "marginal is off Lebesgue by > 0.03");
  c.require(std::abs(d_val - 1.0 / 3.0) <= 0.01, "D(m) misses 1/3 by > 0.01");
  c.note("w1_between", between);
  c.note("w1_lebesgue", to_leb);
  c.note("D", d_val);
  c.finish(60.0);
}

void criterion_6_vanishing_attractor() {
  Criterion c(6, "two-sided attractor vanishes for every finite future window");
  const auto rp = build_preset("halving-ifs", {});
  VanishingAttractorConfig cfg;
  cfg.seed = 1;
  cfg.n_two_sided = 10000;
  cfg.n_one_sided = 100000;
  cfg.depth = 60;
  cfg.starts = 5;
  cfg.max_window = 3;
  cfg.train_n = 100000;
  const auto rep = vanishing_attractor_scenario(rp, cfg);
  c.require(rep.two_sided_basin_max <= 1e-3, "two-sided basin average above 1e-3");
  for (std::size_t k = 0; k < rep.one_sided_basin.size(); ++k)
    c.require(rep.one_sided_basin[k] >= 0.24,
              "window k=" + std::to_string(k) + " predictor beat the 0.24 floor");
  c.note("two_sided", rep.two_sided_basin_max);
  c.note("one_sided_floor", rep.one_sided_floor);
  c.finish(120.0);
}

void criterion_7_structural_properties() {
  Criterion c(7, "h monotone, shifted-g domination, u subadditive on every preset");
  const auto seeds = seed_range(50);
  const std::vector<std::string> presets = {
      "halving-ifs",     "example-2-1",     "circle-rotations",
      "identity-interval", "identity-finite", "constant-finite"};
  for (const auto& name : presets) {
    const auto rp = build_preset(name, {});
    const auto res = property_suite(rp, seeds, 30, 1e-3);
    c.require(res.h_violations == 0, name + ": h monotonicity violated");
    c.require(res.g_violations == 0, name + ": g shift domination violated");
    c.require(res.u_violations == 0, name + ": u subadditivity violated");
    c.require(res.max_excess == 0.0, name + ": excess beyond documented slack");
  }
  c.finish();
}

void criterion_8_negative_controls() {
  Criterion c(8, "rotations never synchronize or converge; identity fibers stay non-unique");
  const auto rot = build_preset("circle-rotations", {});
  for (int s = 1; s <= 5; ++s) {
    const auto path = rot.base().sample_path(static_cast<std::uint64_t>(s));
    const double first = strong_sync_profile(rot, path, 0.25, 1);
    for (std::int64_t n : {2, 10, 100, 500})
      c.require(strong_sync_profile(rot, path, 0.25, n) == first,
                "profile moved between horizons on an isometric family");
    const auto est = estimate_invariant_graph(rot, path, 1e-6, 512, {0.0, 0.25, 0.5});
    c.require(!est.converged, "rotations must not converge");
  }
  const auto identity = build_preset("identity-finite", {});
  const auto set = finite_invariant_measures(identity);
  c.require(!set.unique(), "identity fibers must yield multiple invariant measures");
  c.require(set.measures.size() > 1, "expected a family of invariant measures");
  c.finish();
}

}  // namespace

int main() {
  criterion_1_finite_exactness();
  criterion_2_diameter_equivalence();
  criterion_3_attracting_graph();
  criterion_4_past_measurability();
  criterion_5_empirical_convergence();
  criterion_6_vanishing_attractor();
  criterion_7_structural_properties();
  criterion_8_negative_controls();
  std::printf("%d/8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
