#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "syncav/kernels.hpp"
#include "syncav/product.hpp"
#include "syncav/rational.hpp"
#include "syncav/space.hpp"

namespace syncav {

struct Atom {
  double point;
  double weight;
};

// Finite atomic probability measure on X. Weights are positive and sum to
// 1 within 1e-12 (validated with compensated summation).
class EmpiricalMeasure {
 public:
  EmpiricalMeasure(MetricSpace space, std::vector<Atom> atoms);

  static EmpiricalMeasure dirac(MetricSpace space, double p);
  static EmpiricalMeasure uniform_on(MetricSpace space, const std::vector<double>& pts);
  // Quantile atoms (k + 1/2)/n of Lebesgue on [0,1].
  static EmpiricalMeasure lebesgue_quantiles(std::size_t n);

  const MetricSpace& space() const { return space_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  // Atoms at identical points merged, sorted by point.
  EmpiricalMeasure consolidated() const;

 private:
  MetricSpace space_;
  std::vector<Atom> atoms_;
};

// D(m) = sum_i sum_j w_i w_j d(x_i, x_j). Zero exactly iff the support is a
// single point. Interval measures use an exact sorted prefix-sum evaluation;
// other spaces run the pairwise kernel.
double d_functional(const EmpiricalMeasure& m,
                    kernels::Exec exec = kernels::Exec::Parallel);

// Exact Wasserstein-1 between atomic measures on the same space: CDF
// difference on the interval, offset-minimized periodic CDF difference on
// the circle, and min-cost transport on finite spaces (closed-form total
// variation for the 0/1 metric).
double wasserstein1(const EmpiricalMeasure& m1, const EmpiricalMeasure& m2);

// x-marginal of the empirical occupation measure: uniform atoms on the
// orbit points iterate(0..n-1, path, x).
EmpiricalMeasure empirical_x_marginal(const RandomProduct& rp, const SymbolPath& path,
                                      double x, std::int64_t n);

// One exactly-invariant probability vector on Omega x X for a finite skew
// system, in rational arithmetic.
struct FiniteMeasure {
  // weight of state (omega, x); indexed [omega][x]
  std::vector<std::vector<Rational>> weight;
  bool atomic_disintegration;  // every omega-conditional is a Dirac
  bool marginal_ok;            // Omega-marginal equals the base weights
};

struct FiniteInvariantMeasureSet {
  std::vector<FiniteMeasure> measures;  // extreme points of the invariant set
  bool unique() const { return measures.size() == 1; }
};

// All extreme invariant probability vectors with base marginal P, from the
// cycle decomposition of the skew map restricted to its eventual image.
// Requires a finite-permutation base and a finite fiber space.
FiniteInvariantMeasureSet finite_invariant_measures(const RandomProduct& rp);

// Exact brute force over every (state, x, y): do paired orbits coalesce on
// the periodic part, so the Cesaro distance average tends to zero?
bool finite_strongly_sync_on_average(const RandomProduct& rp);

// Atom list as CSV (point,weight) at full precision.
void write_atoms_csv(const EmpiricalMeasure& m, const std::string& path);

// Compensated (Neumaier) summation; used wherever long Cesaro sums feed
// toleranced verdicts.
double neumaier_sum(const std::vector<double>& values);

}  // namespace syncav
