#include "syncav/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "syncav/errors.hpp"
#include "syncav/rng.hpp"

namespace syncav {

namespace {

double default_probe(const MetricSpace&) {
  return 0.0;  // 0 is a point of every space kind
}

double random_point(const MetricSpace& space, std::uint64_t seed, std::int64_t idx) {
  const double u = unit_uniform(seed, idx);
  if (!space.is_finite()) return u;
  const int count = space.point_count();
  return std::min(static_cast<double>(count - 1), std::floor(u * count));
}

std::vector<std::vector<double>> orbit_buffer(const RandomProduct& rp,
                                              const SymbolPath& path,
                                              const std::vector<double>& starts,
                                              std::int64_t n) {
  std::vector<std::vector<double>> orbits(starts.size());
  for (std::size_t p = 0; p < starts.size(); ++p) {
    orbits[p].reserve(static_cast<std::size_t>(n));
    orbits[p].push_back(starts[p]);
  }
  for (std::int64_t t = 1; t < n; ++t) {
    const int s = path.symbol(t - 1);
    for (auto& orbit : orbits) orbit.push_back(rp.fibers().apply(s, orbit.back()));
  }
  return orbits;
}

}  // namespace

double sync_average(const RandomProduct& rp, const SymbolPath& path, double x, double y,
                    std::int64_t n) {
  if (n < 1) throw std::invalid_argument("sync average needs n >= 1");
  double a = x, b = y, acc = 0.0, comp = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double d = rp.space().distance(a, b);
    const double t = acc + d;
    comp += (std::abs(acc) >= d) ? (acc - t) + d : (d - t) + acc;
    acc = t;
    if (i + 1 < n) {
      const int s = path.symbol(i);
      a = rp.fibers().apply(s, a);
      b = rp.fibers().apply(s, b);
    }
  }
  return (acc + comp) / static_cast<double>(n);
}

double strong_sync_profile(const RandomProduct& rp, const SymbolPath& path, double eps,
                           std::int64_t n, kernels::Exec exec) {
  const auto net = rp.space().epsilon_net(eps);
  const auto orbits = orbit_buffer(rp, path, net, n);
  return kernels::max_pair_cesaro(rp.space(), orbits, n, exec);
}

std::vector<double> strong_sync_profile_curve(const RandomProduct& rp,
                                              const SymbolPath& path, double eps,
                                              const std::vector<std::int64_t>& checkpoints) {
  if (checkpoints.empty()) return {};
  const auto net = rp.space().epsilon_net(eps);
  const std::size_t p = net.size();
  std::vector<double> pos(net);
  std::vector<double> acc(p * (p - 1) / 2, 0.0);
  std::vector<double> out;
  out.reserve(checkpoints.size());

  const std::int64_t n_max = checkpoints.back();
  std::size_t next_cp = 0;
  for (std::int64_t t = 0; t < n_max; ++t) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j)
        acc[k++] += rp.space().distance(pos[i], pos[j]);
    while (next_cp < checkpoints.size() && checkpoints[next_cp] == t + 1) {
      double best = 0.0;
      for (double s : acc) best = std::max(best, s / static_cast<double>(t + 1));
      out.push_back(best);
      ++next_cp;
    }
    if (t + 1 < n_max) {
      const int s = path.symbol(t);
      for (double& v : pos) v = rp.fibers().apply(s, v);
    }
  }
  return out;
}

std::vector<double> image_seed_points(const RandomProduct& rp, double eps) {
  if (rp.fibers().interval_monotone()) return {0.0, 1.0};
  return rp.space().epsilon_net(eps);
}

std::vector<ReportRow> diameter_sequences(const RandomProduct& rp, const SymbolPath& path,
                                          std::int64_t n_max, double eps,
                                          kernels::Exec exec) {
  if (n_max < 1) throw std::invalid_argument("diameter sequences need n_max >= 1");
  const auto seeds = image_seed_points(rp, eps);
  std::vector<ReportRow> rows(static_cast<std::size_t>(n_max));

  // Forward diameters evolve incrementally: one fiber application per point
  // per row reproduces the full composition exactly.
  std::vector<double> img(seeds);
  double cesaro_acc = 0.0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    kernels::map_points(rp.fibers(), path.symbol(n - 1), img, exec);
    auto& row = rows[static_cast<std::size_t>(n - 1)];
    row.n = n;
    row.g = rp.space().finite_diameter(img);
    cesaro_acc += row.g;
    row.cesaro_g = cesaro_acc / static_cast<double>(n);
  }

  if (rp.base().invertible()) {
    const auto h = kernels::pullback_diameters(rp, path, n_max, seeds, exec);
    for (std::int64_t n = 1; n <= n_max; ++n)
      rows[static_cast<std::size_t>(n - 1)].h = h[static_cast<std::size_t>(n - 1)];
  }
  return rows;
}

GraphEstimate estimate_invariant_graph(const RandomProduct& rp, const SymbolPath& path,
                                       double tol, std::int64_t max_depth,
                                       const std::vector<double>& probes,
                                       std::int64_t initial_depth, kernels::Exec exec) {
  if (probes.empty()) throw std::invalid_argument("graph estimation needs probe points");
  if (initial_depth < 1 || 2 * initial_depth > max_depth)
    throw std::invalid_argument("need initial_depth >= 1 and 2*initial_depth <= max_depth");

  GraphEstimate est;
  for (std::int64_t d = initial_depth; 2 * d <= max_depth; d *= 2) {
    const double at_d = rp.pullback_compose(path, d, probes.front());
    const auto at_2d = kernels::pullback_batch(rp, path, 2 * d, probes, exec);
    est.value = at_2d.front();
    est.depth = d;
    est.cauchy_gap = rp.space().distance(at_d, at_2d.front());
    est.probe_spread = at_2d.size() > 1 ? rp.space().finite_diameter(at_2d) : 0.0;
    if (est.cauchy_gap < tol && est.probe_spread < tol) {
      est.converged = true;
      break;
    }
  }
  return est;
}

double invariance_residual(const RandomProduct& rp, const SymbolPath& path,
                           std::int64_t depth, std::int64_t steps, double probe) {
  if (steps < 1) throw std::invalid_argument("residual needs steps >= 1");
  double worst = 0.0;
  double at_i = rp.pullback_compose(path, depth, probe);
  for (std::int64_t i = 0; i < steps; ++i) {
    const SymbolPath here = path.shifted(i);
    const double mapped = rp.apply_fiber(here, at_i);
    const double at_next = rp.pullback_compose(path.shifted(i + 1), depth, probe);
    worst = std::max(worst, rp.space().distance(mapped, at_next));
    at_i = at_next;
  }
  return worst;
}

bool past_dependence_check(const RandomProduct& rp, const SymbolPath& path,
                           std::int64_t depth, double tol, std::uint64_t rewrite_seed,
                           const std::vector<double>& probes) {
  const SymbolPath rewritten = replace_future(path, rp.base(), rewrite_seed);
  for (double p : probes) {
    const double a = rp.pullback_compose(path, depth, p);
    const double b = rp.pullback_compose(rewritten, depth, p);
    if (a != b) return false;  // bitwise: pullback reads only the past
  }
  const std::int64_t max_depth = std::max<std::int64_t>(4 * depth, 16);
  const auto e1 = estimate_invariant_graph(rp, path, tol, max_depth, probes);
  const auto e2 = estimate_invariant_graph(rp, rewritten, tol, max_depth, probes);
  if (e1.converged != e2.converged) return false;
  if (!e1.converged) return true;
  return rp.space().distance(e1.value, e2.value) <= tol;
}

double basin_average_distance(const RandomProduct& rp, const SymbolPath& path, double x,
                              const PathFunction& graph, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("basin average needs n >= 1");
  double v = x, acc = 0.0, comp = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double d = rp.space().distance(v, graph(path.shifted(i)));
    const double t = acc + d;
    comp += (std::abs(acc) >= d) ? (acc - t) + d : (d - t) + acc;
    acc = t;
    if (i + 1 < n) v = rp.fibers().apply(path.symbol(i), v);
  }
  return (acc + comp) / static_cast<double>(n);
}

VanishingAttractorReport vanishing_attractor_scenario(const RandomProduct& rp,
                                                      const VanishingAttractorConfig& cfg) {
  if (rp.base().kind() != BaseSystem::Kind::TwoSidedBernoulli)
    throw PreconditionError("vanishing-attractor scenario needs a two-sided i.i.d. base");
  if (const auto fp = common_fixed_point(rp))
    throw PreconditionError("fiber maps share a fixed point at " +
                            rp.space().point_to_string(*fp));
  if (cfg.max_window < 0 || cfg.max_window > 16)
    throw std::invalid_argument("future windows limited to 0..16 symbols");

  VanishingAttractorReport rep;
  const SymbolPath path = rp.base().sample_path(cfg.seed);
  const auto& space = rp.space();

  // Two-sided side: distance to the pullback graph.
  const PathFunction graph = [&rp, &cfg](const SymbolPath& w) {
    return rp.pullback_compose(w, cfg.depth, default_probe(rp.space()));
  };
  for (int s = 0; s < cfg.starts; ++s) {
    const double x = random_point(space, derive_seed(cfg.seed, 0x5741), s);
    rep.two_sided_basin_max = std::max(
        rep.two_sided_basin_max, basin_average_distance(rp, path, x, graph, cfg.n_two_sided));
  }

  // One-sided side: best empirical L1 predictor of the orbit point from the
  // future window (w_i, ..., w_{i+k-1}), trained on an independent run.
  const SymbolPath one_sided = path.truncated_to_future();
  const int alphabet = rp.base().alphabet_size();
  const SymbolPath train_path =
      rp.base().sample_path(derive_seed(cfg.seed, 0x7261)).truncated_to_future();

  for (int k = 0; k <= cfg.max_window; ++k) {
    std::int64_t patterns = 1;
    for (int j = 0; j < k; ++j) patterns *= alphabet;
    std::vector<std::vector<double>> buckets(static_cast<std::size_t>(patterns));

    double v = random_point(space, derive_seed(cfg.seed, 0x7472), 0);
    const std::int64_t burn_in = 64;
    for (std::int64_t i = 0; i < cfg.train_n; ++i) {
      if (i >= burn_in) {
        std::int64_t pat = 0;
        for (int j = 0; j < k; ++j) pat = pat * alphabet + train_path.symbol(i + j);
        buckets[static_cast<std::size_t>(pat)].push_back(v);
      }
      v = rp.fibers().apply(train_path.symbol(i), v);
    }

    std::vector<double> medians(static_cast<std::size_t>(patterns),
                                default_probe(space));
    for (std::int64_t pat = 0; pat < patterns; ++pat) {
      auto& bucket = buckets[static_cast<std::size_t>(pat)];
      if (bucket.empty()) continue;
      std::nth_element(bucket.begin(), bucket.begin() + bucket.size() / 2, bucket.end());
      medians[static_cast<std::size_t>(pat)] = bucket[bucket.size() / 2];
    }

    const PathFunction predictor = [k, alphabet, &medians](const SymbolPath& w) {
      std::int64_t pat = 0;
      for (int j = 0; j < k; ++j) pat = pat * alphabet + w.symbol(j);
      return medians[static_cast<std::size_t>(pat)];
    };

    // Floor semantics: every start must stay away from the predictor, so
    // record the start that comes closest.
    double best_attempt = std::numeric_limits<double>::infinity();
    for (int s = 0; s < cfg.starts; ++s) {
      const double x = random_point(space, derive_seed(cfg.seed, 0x6f73), s);
      best_attempt = std::min(best_attempt, basin_average_distance(rp, one_sided, x,
                                                                   predictor, cfg.n_one_sided));
    }
    rep.one_sided_basin.push_back(best_attempt);
  }
  rep.one_sided_floor =
      *std::min_element(rep.one_sided_basin.begin(), rep.one_sided_basin.end());
  return rep;
}

PropertySuiteResult property_suite(const RandomProduct& rp,
                                   const std::vector<std::uint64_t>& seeds,
                                   std::int64_t n_max, double eps, int samples_per_seed,
                                   kernels::Exec exec) {
  PropertySuiteResult res;
  res.slack = rp.fibers().exact_diameter_path() ? 0.0 : 2.0 * rp.space().diameter_bound() * eps;
  const auto seed_pts = image_seed_points(rp, eps);

  const auto forward_g = [&](const SymbolPath& path, std::int64_t upto) {
    std::vector<double> g(static_cast<std::size_t>(upto));
    std::vector<double> img(seed_pts);
    for (std::int64_t n = 1; n <= upto; ++n) {
      kernels::map_points(rp.fibers(), path.symbol(n - 1), img, exec);
      g[static_cast<std::size_t>(n - 1)] = rp.space().finite_diameter(img);
    }
    return g;
  };

  for (const std::uint64_t seed : seeds) {
    const SymbolPath path = rp.base().sample_path(seed);
    ++res.seeds_run;

    const auto g = forward_g(path, n_max);

    if (rp.base().invertible()) {
      const auto h = kernels::pullback_diameters(rp, path, n_max, seed_pts, exec);
      for (std::int64_t n = 0; n + 1 < n_max; ++n) {
        ++res.h_checks;
        const double excess = h[static_cast<std::size_t>(n + 1)] -
                              h[static_cast<std::size_t>(n)] - res.slack;
        if (excess > 0.0) {
          ++res.h_violations;
          res.max_excess = std::max(res.max_excess, excess);
        }
      }
    }

    for (int t = 0; t < samples_per_seed; ++t) {
      const auto m = static_cast<std::int64_t>(
                         unit_uniform(derive_seed(seed, 0x6d), t) * double(n_max - 1)) + 1;
      const auto k = static_cast<std::int64_t>(
                         unit_uniform(derive_seed(seed, 0x6b), t) * double(n_max - m)) + 0;
      if (m + k > n_max || k < 0) continue;

      const auto g_shift = forward_g(path.shifted(k), std::max<std::int64_t>(m, 1));

      // g_{m+k}(w) <= g_m(theta^k w) + slack
      ++res.g_checks;
      const double g_excess = g[static_cast<std::size_t>(m + k - 1)] -
                              g_shift[static_cast<std::size_t>(m - 1)] - res.slack;
      if (g_excess > 0.0) {
        ++res.g_violations;
        res.max_excess = std::max(res.max_excess, g_excess);
      }

      // u_{m+n'}(w) <= u_m(w) + u_{n'}(theta^m w) + terms * slack
      const std::int64_t np = n_max - m;
      if (np >= 1) {
        const auto g_at_m = forward_g(path.shifted(m), np);
        double u_m = 0.0, u_mn = 0.0, u_np_shift = 0.0;
        for (std::int64_t j = 0; j < m; ++j) u_m += g[static_cast<std::size_t>(j)];
        for (std::int64_t j = 0; j < m + np; ++j) u_mn += g[static_cast<std::size_t>(j)];
        for (std::int64_t j = 0; j < np; ++j)
          u_np_shift += g_at_m[static_cast<std::size_t>(j)];
        ++res.u_checks;
        const double u_excess =
            u_mn - u_m - u_np_shift - res.slack * static_cast<double>(m + np);
        if (u_excess > 0.0) {
          ++res.u_violations;
          res.max_excess = std::max(res.max_excess, u_excess);
        }
      }
    }
  }
  return res;
}

}  // namespace syncav
