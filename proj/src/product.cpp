#include "syncav/product.hpp"

#include <cmath>
#include <stdexcept>

#include "syncav/rng.hpp"

namespace syncav {

namespace {

// Dyadic rationals survive circle arithmetic without rounding; presets use
// them so the isometric controls are bit-exact.
bool is_dyadic(double x) {
  const double scaled = std::ldexp(x, 40);
  return scaled == std::floor(scaled);
}

}  // namespace

FiberFamily FiberFamily::affine(std::vector<double> slope, std::vector<double> offset) {
  if (slope.empty() || slope.size() != offset.size())
    throw std::invalid_argument("affine family needs matching slope/offset lists");
  for (std::size_t s = 0; s < slope.size(); ++s) {
    const double at0 = offset[s];
    const double at1 = slope[s] + offset[s];
    if (at0 < 0.0 || at0 > 1.0 || at1 < 0.0 || at1 > 1.0)
      throw std::invalid_argument("affine map leaves [0,1]; clamping is not supported");
  }
  FiberFamily f;
  f.kind_ = Kind::Affine;
  f.space_ = MetricSpace::interval();
  f.slope_ = std::move(slope);
  f.offset_ = std::move(offset);
  f.lipschitz_.reserve(f.slope_.size());
  for (double a : f.slope_) f.lipschitz_.push_back(std::abs(a));
  f.interval_monotone_ = true;
  f.exact_diameter_ = true;
  return f;
}

FiberFamily FiberFamily::rotations(std::vector<double> angle) {
  if (angle.empty()) throw std::invalid_argument("rotation family needs angles");
  FiberFamily f;
  f.kind_ = Kind::Rotation;
  f.space_ = MetricSpace::circle();
  bool dyadic = true;
  for (double a : angle) {
    if (a < 0.0 || a >= 1.0)
      throw std::invalid_argument("rotation angle must lie in [0,1)");
    dyadic = dyadic && is_dyadic(a);
  }
  f.angle_ = std::move(angle);
  f.lipschitz_.assign(f.angle_.size(), 1.0);
  f.exact_diameter_ = dyadic;
  return f;
}

FiberFamily FiberFamily::finite_table(MetricSpace space,
                                      std::vector<std::vector<int>> table) {
  if (!space.is_finite())
    throw std::invalid_argument("finite_table needs a finite space");
  const int npts = space.point_count();
  if (table.empty()) throw std::invalid_argument("empty fiber table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != npts)
      throw std::invalid_argument("fiber table row size does not match the space");
    for (int v : row)
      if (v < 0 || v >= npts)
        throw std::invalid_argument("fiber table maps outside the space");
  }
  FiberFamily f;
  f.kind_ = Kind::FiniteTable;
  f.space_ = std::move(space);
  f.table_ = std::move(table);
  f.lipschitz_.reserve(f.table_.size());
  for (const auto& row : f.table_) {
    double lip = 0.0;
    for (int x = 0; x < npts; ++x)
      for (int y = x + 1; y < npts; ++y) {
        const double dxy = f.space_.distance(x, y);
        if (dxy > 0.0)
          lip = std::max(lip, f.space_.distance(row[static_cast<std::size_t>(x)],
                                                row[static_cast<std::size_t>(y)]) /
                                  dxy);
      }
    f.lipschitz_.push_back(lip);
  }
  f.exact_diameter_ = true;
  return f;
}

double FiberFamily::apply(int symbol, double x) const {
  if (symbol < 0 || symbol >= symbol_count())
    throw std::domain_error("symbol outside the fiber family");
  if (!space_.contains(x)) throw std::domain_error("point outside the space");
  switch (kind_) {
    case Kind::Affine:
      return slope_[static_cast<std::size_t>(symbol)] * x +
             offset_[static_cast<std::size_t>(symbol)];
    case Kind::Rotation:
      return space_.canonical(x + angle_[static_cast<std::size_t>(symbol)]);
    case Kind::FiniteTable:
      return static_cast<double>(
          table_[static_cast<std::size_t>(symbol)][static_cast<std::size_t>(x)]);
  }
  return x;
}

int FiberFamily::symbol_count() const {
  switch (kind_) {
    case Kind::Affine:
      return static_cast<int>(slope_.size());
    case Kind::Rotation:
      return static_cast<int>(angle_.size());
    case Kind::FiniteTable:
      return static_cast<int>(table_.size());
  }
  return 0;
}

RandomProduct::RandomProduct(BaseSystem base, FiberFamily fibers)
    : base_(std::move(base)), fibers_(std::move(fibers)) {
  if (base_.alphabet_size() != fibers_.symbol_count())
    throw std::invalid_argument("base alphabet and fiber family symbol counts differ");
}

double RandomProduct::apply_fiber(const SymbolPath& path, double x) const {
  return fibers_.apply(path.symbol(0), x);
}

double RandomProduct::iterate(std::int64_t n, const SymbolPath& path, double x) const {
  if (n < 0) throw std::domain_error("iterate needs n >= 0");
  double v = x;
  for (std::int64_t i = 0; i < n; ++i) v = fibers_.apply(path.symbol(i), v);
  return v;
}

std::pair<SymbolPath, double> RandomProduct::skew_step(const SymbolPath& path,
                                                       double x) const {
  return {path.shifted(1), apply_fiber(path, x)};
}

double RandomProduct::pullback_compose(const SymbolPath& path, std::int64_t n,
                                       double p) const {
  if (!base_.invertible())
    throw std::invalid_argument("pullback composition needs an invertible base");
  if (n < 1) throw std::domain_error("pullback composition needs n >= 1");
  double v = p;
  for (std::int64_t k = n; k >= 1; --k) v = fibers_.apply(path.symbol(-k), v);
  return v;
}

double RandomProduct::reversed_forward_compose(const SymbolPath& path, std::int64_t n,
                                               double p) const {
  if (n < 0) throw std::domain_error("reversed forward composition needs n >= 0");
  double v = p;
  for (std::int64_t k = n; k >= 0; --k) v = fibers_.apply(path.symbol(k), v);
  return v;
}

std::vector<double> RandomProduct::image_points(const SymbolPath& path, std::int64_t n,
                                                const std::vector<double>& seeds,
                                                Direction direction) const {
  if (seeds.empty()) throw std::invalid_argument("image_points needs seed points");
  std::vector<double> out(seeds);
  if (direction == Direction::Forward) {
    for (std::int64_t i = 0; i < n; ++i) {
      const int s = path.symbol(i);
      for (double& v : out) v = fibers_.apply(s, v);
    }
  } else {
    for (double& v : out) v = pullback_compose(path, n, v);
  }
  return out;
}

std::optional<double> common_fixed_point(const RandomProduct& rp, double net_eps,
                                         double tol) {
  const auto net = rp.space().epsilon_net(net_eps);
  const int symbols = rp.fibers().symbol_count();
  for (double x : net) {
    bool fixed_by_all = true;
    for (int s = 0; s < symbols && fixed_by_all; ++s) {
      if (rp.base().weight_of(s) <= 0.0) continue;
      const double fx = rp.fibers().apply(s, x);
      const double gap = rp.space().distance(fx, x);
      fixed_by_all = rp.space().is_finite() ? (gap == 0.0) : (gap <= tol);
    }
    if (fixed_by_all) return x;
  }
  return std::nullopt;
}

}  // namespace syncav
