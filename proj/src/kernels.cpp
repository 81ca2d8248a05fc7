#include "syncav/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace syncav::kernels {

namespace {

double fold_max(const std::vector<double>& v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, x);
  return best;
}

double fold_sum(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc;
}

double pair_cesaro(const MetricSpace& space, const std::vector<double>& a,
                   const std::vector<double>& b, std::int64_t n) {
  double acc = 0.0;
  for (std::int64_t t = 0; t < n; ++t)
    acc += space.distance(a[static_cast<std::size_t>(t)],
                          b[static_cast<std::size_t>(t)]);
  return acc / static_cast<double>(n);
}

}  // namespace

double pairwise_mean_distance_serial(const MetricSpace& space,
                                     const std::vector<double>& pts,
                                     const std::vector<double>& weights) {
  const std::size_t n = pts.size();
  std::vector<double> row(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      acc += weights[j] * space.distance(pts[i], pts[j]);
    row[i] = weights[i] * acc;
  }
  return fold_sum(row);
}

double pairwise_mean_distance_parallel(const MetricSpace& space,
                                       const std::vector<double>& pts,
                                       const std::vector<double>& weights) {
  const auto n = static_cast<std::int64_t>(pts.size());
  std::vector<double> row(pts.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::int64_t j = 0; j < n; ++j)
      acc += weights[static_cast<std::size_t>(j)] *
             space.distance(pts[static_cast<std::size_t>(i)],
                            pts[static_cast<std::size_t>(j)]);
    row[static_cast<std::size_t>(i)] = weights[static_cast<std::size_t>(i)] * acc;
  }
  return fold_sum(row);
}

double pairwise_mean_distance(const MetricSpace& space, const std::vector<double>& pts,
                              const std::vector<double>& weights, Exec exec) {
  if (pts.size() != weights.size())
    throw std::invalid_argument("points/weights size mismatch");
  return exec == Exec::Serial ? pairwise_mean_distance_serial(space, pts, weights)
                              : pairwise_mean_distance_parallel(space, pts, weights);
}

double max_pairwise_distance_serial(const MetricSpace& space,
                                    const std::vector<double>& pts) {
  const std::size_t n = pts.size();
  std::vector<double> row(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double best = 0.0;
    for (std::size_t j = i + 1; j < n; ++j)
      best = std::max(best, space.distance(pts[i], pts[j]));
    row[i] = best;
  }
  return fold_max(row);
}

double max_pairwise_distance_parallel(const MetricSpace& space,
                                      const std::vector<double>& pts) {
  const auto n = static_cast<std::int64_t>(pts.size());
  std::vector<double> row(pts.size(), 0.0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    double best = 0.0;
    for (std::int64_t j = i + 1; j < n; ++j)
      best = std::max(best, space.distance(pts[static_cast<std::size_t>(i)],
                                           pts[static_cast<std::size_t>(j)]));
    row[static_cast<std::size_t>(i)] = best;
  }
  return fold_max(row);
}

double max_pairwise_distance(const MetricSpace& space, const std::vector<double>& pts,
                             Exec exec) {
  if (pts.empty()) throw std::domain_error("diameter of an empty point list");
  return exec == Exec::Serial ? max_pairwise_distance_serial(space, pts)
                              : max_pairwise_distance_parallel(space, pts);
}

double max_pair_cesaro_serial(const MetricSpace& space,
                              const std::vector<std::vector<double>>& orbits,
                              std::int64_t n) {
  const std::size_t p = orbits.size();
  std::vector<double> row(p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    double best = 0.0;
    for (std::size_t j = i + 1; j < p; ++j)
      best = std::max(best, pair_cesaro(space, orbits[i], orbits[j], n));
    row[i] = best;
  }
  return fold_max(row);
}

double max_pair_cesaro_parallel(const MetricSpace& space,
                                const std::vector<std::vector<double>>& orbits,
                                std::int64_t n) {
  const auto p = static_cast<std::int64_t>(orbits.size());
  std::vector<double> row(orbits.size(), 0.0);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < p; ++i) {
    double best = 0.0;
    for (std::int64_t j = i + 1; j < p; ++j)
      best = std::max(best, pair_cesaro(space, orbits[static_cast<std::size_t>(i)],
                                        orbits[static_cast<std::size_t>(j)], n));
    row[static_cast<std::size_t>(i)] = best;
  }
  return fold_max(row);
}

double max_pair_cesaro(const MetricSpace& space,
                       const std::vector<std::vector<double>>& orbits, std::int64_t n,
                       Exec exec) {
  for (const auto& orbit : orbits)
    if (static_cast<std::int64_t>(orbit.size()) < n)
      throw std::invalid_argument("orbit shorter than the requested horizon");
  return exec == Exec::Serial ? max_pair_cesaro_serial(space, orbits, n)
                              : max_pair_cesaro_parallel(space, orbits, n);
}

void map_points(const FiberFamily& fibers, int symbol, std::vector<double>& pts,
                Exec exec) {
  const auto n = static_cast<std::int64_t>(pts.size());
  if (exec == Exec::Serial) {
    for (double& v : pts) v = fibers.apply(symbol, v);
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    pts[static_cast<std::size_t>(i)] = fibers.apply(symbol, pts[static_cast<std::size_t>(i)]);
}

std::vector<double> pullback_batch(const RandomProduct& rp, const SymbolPath& path,
                                   std::int64_t depth, const std::vector<double>& seeds,
                                   Exec exec) {
  std::vector<double> out(seeds.size());
  const auto n = static_cast<std::int64_t>(seeds.size());
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < n; ++i)
      out[static_cast<std::size_t>(i)] =
          rp.pullback_compose(path, depth, seeds[static_cast<std::size_t>(i)]);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        rp.pullback_compose(path, depth, seeds[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<double> pullback_diameters(const RandomProduct& rp, const SymbolPath& path,
                                       std::int64_t n_max,
                                       const std::vector<double>& seeds, Exec exec) {
  std::vector<double> h(static_cast<std::size_t>(n_max));
  if (exec == Exec::Serial) {
    for (std::int64_t d = 1; d <= n_max; ++d) {
      const auto img = rp.image_points(path, d, seeds, Direction::Pullback);
      h[static_cast<std::size_t>(d - 1)] = rp.space().finite_diameter(img);
    }
    return h;
  }
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t d = 1; d <= n_max; ++d) {
    const auto img = rp.image_points(path, d, seeds, Direction::Pullback);
    h[static_cast<std::size_t>(d - 1)] = rp.space().finite_diameter(img);
  }
  return h;
}

}  // namespace syncav::kernels
