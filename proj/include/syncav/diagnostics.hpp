#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "syncav/kernels.hpp"
#include "syncav/measures.hpp"
#include "syncav/product.hpp"
#include "syncav/report.hpp"

namespace syncav {

// (1/n) sum_{i<n} d(orbit_i(x), orbit_i(y)) along one realization.
double sync_average(const RandomProduct& rp, const SymbolPath& path, double x, double y,
                    std::int64_t n);

// Finite surrogate for the sup over all pairs: max over unordered pairs of
// eps-net points of the n-step sync average.
double strong_sync_profile(const RandomProduct& rp, const SymbolPath& path, double eps,
                           std::int64_t n, kernels::Exec exec = kernels::Exec::Parallel);

// Profile values at several horizons in one sweep; checkpoints ascending.
std::vector<double> strong_sync_profile_curve(const RandomProduct& rp,
                                              const SymbolPath& path, double eps,
                                              const std::vector<std::int64_t>& checkpoints);

// Rows g_1..g_{n_max}, cesaro_g, and (invertible bases) h_1..h_{n_max}.
// Image surrogates: endpoints {0,1} for monotone interval families, every
// point for finite spaces, an eps-net otherwise.
std::vector<ReportRow> diameter_sequences(const RandomProduct& rp, const SymbolPath& path,
                                          std::int64_t n_max, double eps,
                                          kernels::Exec exec = kernels::Exec::Parallel);

// Seed points used by diameter_sequences and the graph estimator.
std::vector<double> image_seed_points(const RandomProduct& rp, double eps);

struct GraphEstimate {
  double value = 0.0;       // estimated graph point at the path's origin
  std::int64_t depth = 0;   // depth n the gap was measured at
  double cauchy_gap = 0.0;  // d(pullback(n, p0), pullback(2n, p0))
  double probe_spread = 0.0;
  bool converged = false;
};

// Doubles the pullback depth from initial_depth until both the Cauchy gap
// and the probe spread fall below tol, or 2*depth would exceed max_depth.
GraphEstimate estimate_invariant_graph(const RandomProduct& rp, const SymbolPath& path,
                                       double tol, std::int64_t max_depth,
                                       const std::vector<double>& probes,
                                       std::int64_t initial_depth = 5,
                                       kernels::Exec exec = kernels::Exec::Parallel);

// max_{0<=i<steps} d( f at theta^i omega applied to the depth-d pullback
// there, depth-d pullback at theta^{i+1} omega ).
double invariance_residual(const RandomProduct& rp, const SymbolPath& path,
                           std::int64_t depth, std::int64_t steps, double probe);

// Rewrites every coordinate >= 0 with fresh symbols and checks the depth-d
// pullback is bit-identical and the converged estimates agree within tol.
bool past_dependence_check(const RandomProduct& rp, const SymbolPath& path,
                           std::int64_t depth, double tol, std::uint64_t rewrite_seed,
                           const std::vector<double>& probes);

using PathFunction = std::function<double(const SymbolPath&)>;

// (1/n) sum_{i<n} d(orbit_i(x), graph(theta^i omega)).
double basin_average_distance(const RandomProduct& rp, const SymbolPath& path, double x,
                              const PathFunction& graph, std::int64_t n);

// -------------------------------------------------------------------------
// Vanishing-attractor scenario: the two-sided pullback graph attracts, while
// no finite-future-window predictor of the one-sided product does.

struct VanishingAttractorConfig {
  std::uint64_t seed = 1;
  std::int64_t n_two_sided = 10000;
  std::int64_t n_one_sided = 100000;
  std::int64_t depth = 60;        // pullback depth for the two-sided graph
  int starts = 5;                 // random starting points per side
  int max_window = 3;             // future windows k = 0..max_window
  std::int64_t train_n = 100000;  // training run for the L1 predictors
};

struct VanishingAttractorReport {
  double two_sided_basin_max = 0.0;          // worst start, distance to graph
  std::vector<double> one_sided_basin;       // per window size k = 0..max_window
  double one_sided_floor = 0.0;              // min over k
  double independence_bound = 0.25;          // analytic floor for the halving family
};

VanishingAttractorReport vanishing_attractor_scenario(const RandomProduct& rp,
                                                      const VanishingAttractorConfig& cfg);

// -------------------------------------------------------------------------
// Structural property suite: h monotone in depth, forward diameters
// dominated by shifted ones, and subadditivity of the running diameter sum.

struct PropertySuiteResult {
  int seeds_run = 0;
  int h_checks = 0, h_violations = 0;
  int g_checks = 0, g_violations = 0;
  int u_checks = 0, u_violations = 0;
  double max_excess = 0.0;  // worst violation beyond the slack, 0 when clean
  double slack = 0.0;       // 0 on exact presets, 2*L*eps on net surrogates
};

PropertySuiteResult property_suite(const RandomProduct& rp,
                                   const std::vector<std::uint64_t>& seeds,
                                   std::int64_t n_max, double eps,
                                   int samples_per_seed = 8,
                                   kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace syncav
