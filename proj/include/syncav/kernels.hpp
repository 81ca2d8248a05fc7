#pragma once

#include <cstdint>
#include <vector>

#include "syncav/product.hpp"
#include "syncav/space.hpp"

namespace syncav::kernels {

// Every kernel comes as a serial reference and an OpenMP variant with the
// same loop and reduction structure: parallel loops write per-index slots
// and the final fold runs serially in index order, so the two variants are
// bit-identical and results do not depend on the thread count.
enum class Exec { Serial, Parallel };

// sum_i sum_j w_i w_j d(x_i, x_j)
double pairwise_mean_distance(const MetricSpace& space, const std::vector<double>& pts,
                              const std::vector<double>& weights, Exec exec);
double pairwise_mean_distance_serial(const MetricSpace& space,
                                     const std::vector<double>& pts,
                                     const std::vector<double>& weights);
double pairwise_mean_distance_parallel(const MetricSpace& space,
                                       const std::vector<double>& pts,
                                       const std::vector<double>& weights);

// max_{i<j} d(pts[i], pts[j]) by full pairwise scan (reference for the
// fast paths in MetricSpace::finite_diameter).
double max_pairwise_distance(const MetricSpace& space, const std::vector<double>& pts,
                             Exec exec);
double max_pairwise_distance_serial(const MetricSpace& space,
                                    const std::vector<double>& pts);
double max_pairwise_distance_parallel(const MetricSpace& space,
                                      const std::vector<double>& pts);

// Orbits stored per point: orbits[p][t] is point p after t steps. Returns
// max over unordered pairs of the n-step Cesaro distance average
// (1/n) sum_t d(orbits[p][t], orbits[q][t]).
double max_pair_cesaro(const MetricSpace& space,
                       const std::vector<std::vector<double>>& orbits, std::int64_t n,
                       Exec exec);
double max_pair_cesaro_serial(const MetricSpace& space,
                              const std::vector<std::vector<double>>& orbits,
                              std::int64_t n);
double max_pair_cesaro_parallel(const MetricSpace& space,
                                const std::vector<std::vector<double>>& orbits,
                                std::int64_t n);

// Applies one fiber map to every point in place.
void map_points(const FiberFamily& fibers, int symbol, std::vector<double>& pts,
                Exec exec);

// Depth-n pullback of every seed.
std::vector<double> pullback_batch(const RandomProduct& rp, const SymbolPath& path,
                                   std::int64_t depth, const std::vector<double>& seeds,
                                   Exec exec);

// Pullback image diameters h_1..h_n, one slot per depth, parallel over
// depths. seeds are the image surrogate (exact endpoints, all points, or a
// net depending on the family).
std::vector<double> pullback_diameters(const RandomProduct& rp, const SymbolPath& path,
                                       std::int64_t n_max,
                                       const std::vector<double>& seeds, Exec exec);

}  // namespace syncav::kernels
