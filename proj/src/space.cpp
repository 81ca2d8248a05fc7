#include "syncav/space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace syncav {

MetricSpace MetricSpace::interval() {
  MetricSpace s;
  s.kind_ = Kind::Interval;
  s.diameter_bound_ = 1.0;
  return s;
}

MetricSpace MetricSpace::circle() {
  MetricSpace s;
  s.kind_ = Kind::Circle;
  s.diameter_bound_ = 0.5;
  return s;
}

MetricSpace MetricSpace::finite(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  std::vector<std::vector<double>> metric(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) metric[i][i] = 0.0;
  return finite(std::move(labels), std::move(metric));
}

MetricSpace MetricSpace::finite(std::vector<std::string> labels,
                                std::vector<std::vector<double>> metric) {
  if (labels.empty()) throw std::invalid_argument("finite space needs at least one point");
  const std::size_t n = labels.size();
  if (metric.size() != n)
    throw std::invalid_argument("metric matrix size does not match point count");
  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (metric[i].size() != n)
      throw std::invalid_argument("metric matrix is not square");
    if (metric[i][i] != 0.0)
      throw std::invalid_argument("metric has nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (metric[i][j] < 0.0) throw std::invalid_argument("metric has negative entry");
      if (metric[i][j] != metric[j][i])
        throw std::invalid_argument("metric matrix is not symmetric");
      bound = std::max(bound, metric[i][j]);
    }
  }
  // Small enough to check the triangle inequality exhaustively.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (metric[i][j] > metric[i][k] + metric[k][j] + 1e-12)
          throw std::invalid_argument("metric violates the triangle inequality");

  MetricSpace s;
  s.kind_ = Kind::FiniteDiscrete;
  s.labels_ = std::move(labels);
  s.metric_ = std::move(metric);
  s.diameter_bound_ = bound;
  return s;
}

bool MetricSpace::contains(double x) const {
  switch (kind_) {
    case Kind::Interval:
      return x >= 0.0 && x <= 1.0;
    case Kind::Circle:
      return x >= 0.0 && x < 1.0;
    case Kind::FiniteDiscrete: {
      if (x != std::floor(x)) return false;
      const auto i = static_cast<long long>(x);
      return i >= 0 && i < static_cast<long long>(labels_.size());
    }
  }
  return false;
}

double MetricSpace::canonical(double x) const {
  if (kind_ != Kind::Circle) return x;
  double t = x - std::floor(x);
  if (t >= 1.0) t -= 1.0;  // floor rounding at the seam
  return t;
}

double MetricSpace::distance(double x, double y) const {
  if (!contains(x) || !contains(y))
    throw std::domain_error("point outside the space");
  switch (kind_) {
    case Kind::Interval:
      return std::abs(x - y);
    case Kind::Circle: {
      const double a = std::abs(x - y);
      return std::min(a, 1.0 - a);
    }
    case Kind::FiniteDiscrete:
      return metric_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }
  return 0.0;
}

std::vector<double> MetricSpace::epsilon_net(double eps) const {
  if (eps <= 0.0) throw std::invalid_argument("epsilon must be positive");
  std::vector<double> net;
  switch (kind_) {
    case Kind::Interval: {
      const auto m = static_cast<std::size_t>(std::ceil(1.0 / eps));
      net.reserve(m + 1);
      for (std::size_t k = 0; k <= m; ++k)
        net.push_back(static_cast<double>(k) / static_cast<double>(m));
      break;
    }
    case Kind::Circle: {
      // Power-of-two count: every net point k/m is an exact dyadic, which
      // keeps the rotation presets bit-exact.
      std::size_t m = 1;
      while (static_cast<double>(m) * eps < 1.0) m <<= 1;
      net.reserve(m);
      for (std::size_t k = 0; k < m; ++k)
        net.push_back(static_cast<double>(k) / static_cast<double>(m));
      break;
    }
    case Kind::FiniteDiscrete:
      net.reserve(labels_.size());
      for (std::size_t k = 0; k < labels_.size(); ++k)
        net.push_back(static_cast<double>(k));
      break;
  }
  return net;
}

double MetricSpace::finite_diameter(const std::vector<double>& pts) const {
  if (pts.empty()) throw std::domain_error("diameter of an empty point list");
  switch (kind_) {
    case Kind::Interval: {
      const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
      return distance(*lo, *hi);
    }
    case Kind::Circle: {
      if (pts.size() == 1) return 0.0;
      std::vector<double> sorted(pts);
      std::sort(sorted.begin(), sorted.end());
      // For each point the farthest candidate sits next to its antipode.
      double best = 0.0;
      const std::size_t n = sorted.size();
      for (std::size_t i = 0; i < n; ++i) {
        const double anti = canonical(sorted[i] + 0.5);
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), anti);
        const std::size_t hi = (it == sorted.end()) ? 0 : static_cast<std::size_t>(it - sorted.begin());
        const std::size_t lo = (hi + n - 1) % n;
        best = std::max(best, distance(sorted[i], sorted[hi]));
        best = std::max(best, distance(sorted[i], sorted[lo]));
      }
      return best;
    }
    case Kind::FiniteDiscrete: {
      double best = 0.0;
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
          best = std::max(best, distance(pts[i], pts[j]));
      return best;
    }
  }
  return 0.0;
}

int MetricSpace::point_count() const {
  if (kind_ != Kind::FiniteDiscrete)
    throw std::domain_error("point_count on a non-finite space");
  return static_cast<int>(labels_.size());
}

int MetricSpace::index_of(const std::string& label) const {
  if (kind_ != Kind::FiniteDiscrete)
    throw std::domain_error("index_of on a non-finite space");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown point label '" + label + "'");
}

std::string MetricSpace::point_to_string(double x) const {
  if (kind_ == Kind::FiniteDiscrete && contains(x))
    return labels_[static_cast<std::size_t>(x)];
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace syncav
