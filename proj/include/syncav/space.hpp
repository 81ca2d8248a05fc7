#pragma once

#include <string>
#include <vector>

namespace syncav {

// Compact metric space the fiber maps act on. Three kinds:
//   Interval       [0,1] with |x - y|
//   Circle         [0,1) with arc distance min(|x-y|, 1-|x-y|)
//   FiniteDiscrete labeled points with an explicit symmetric matrix,
//                  defaulting to the 0/1 discrete metric
//
// Points are plain doubles; finite-space points are integer indices into
// the label list, stored as doubles (exact for any realistic point count).
class MetricSpace {
 public:
  enum class Kind { Interval, Circle, FiniteDiscrete };

  static MetricSpace interval();
  static MetricSpace circle();
  static MetricSpace finite(std::vector<std::string> labels);
  static MetricSpace finite(std::vector<std::string> labels,
                            std::vector<std::vector<double>> metric);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::FiniteDiscrete; }

  // Metric value; throws std::domain_error if either point is outside X.
  double distance(double x, double y) const;

  bool contains(double x) const;

  // Reduces a raw map output to the canonical chart: mod 1 for the circle,
  // identity elsewhere.
  double canonical(double x) const;

  // L = sup d. 1 for the interval, 1/2 for the circle, max entry for finite.
  double diameter_bound() const { return diameter_bound_; }

  // Finite point set within eps of every point of X. Finite spaces return
  // all points regardless of eps. Circle nets use a power-of-two count so
  // net points are exact dyadics.
  std::vector<double> epsilon_net(double eps) const;

  // Max pairwise distance of a nonempty point list. Exact; uses the
  // min/max shortcut on the interval and a sorted antipode search on the
  // circle, falling back to the full pairwise scan on finite spaces.
  double finite_diameter(const std::vector<double>& pts) const;

  int point_count() const;  // finite spaces only
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // throws if unknown
  std::string point_to_string(double x) const;

 private:
  MetricSpace() = default;

  Kind kind_ = Kind::Interval;
  double diameter_bound_ = 1.0;
  std::vector<std::string> labels_;                // finite only
  std::vector<std::vector<double>> metric_;        // finite only
};

}  // namespace syncav
