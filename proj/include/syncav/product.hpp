#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "syncav/base.hpp"
#include "syncav/space.hpp"

namespace syncav {

enum class Direction { Forward, Pullback };

// Family of fiber maps f_s : X -> X indexed by the base symbol. The symbol
// applied at each step is coordinate 0 of the current path. Three closed
// forms cover every preset and user config:
//   Affine       f_s(x) = a_s x + b_s on the interval (closure validated)
//   Rotation     f_s(x) = x + alpha_s mod 1 on the circle
//   FiniteTable  table lookup on a finite space
class FiberFamily {
 public:
  enum class Kind { Affine, Rotation, FiniteTable };

  static FiberFamily affine(std::vector<double> slope, std::vector<double> offset);
  static FiberFamily rotations(std::vector<double> angle);
  static FiberFamily finite_table(MetricSpace space, std::vector<std::vector<int>> table);

  double apply(int symbol, double x) const;

  Kind kind() const { return kind_; }
  int symbol_count() const;
  const MetricSpace& space() const { return space_; }

  // Compositions map [0,1] onto the interval between the images of the
  // endpoints, so image diameters from the two seeds {0,1} are exact.
  bool interval_monotone() const { return interval_monotone_; }

  // True when image diameters computed by this family involve no rounding:
  // monotone interval families, finite tables, and dyadic-angle rotations.
  bool exact_diameter_path() const { return exact_diameter_; }

  // Per-symbol Lipschitz bounds (1 for rotations, |a_s| for affine,
  // max-ratio over pairs for finite tables).
  const std::vector<double>& lipschitz() const { return lipschitz_; }

 private:
  FiberFamily() = default;

  Kind kind_ = Kind::Affine;
  MetricSpace space_ = MetricSpace::interval();
  std::vector<double> slope_, offset_;        // affine
  std::vector<double> angle_;                 // rotation
  std::vector<std::vector<int>> table_;       // finite
  std::vector<double> lipschitz_;
  bool interval_monotone_ = false;
  bool exact_diameter_ = false;
};

// The random product: a base system plus a fiber family over its alphabet.
// All operations are pure and safe to call concurrently.
class RandomProduct {
 public:
  RandomProduct(BaseSystem base, FiberFamily fibers);

  const BaseSystem& base() const { return base_; }
  const FiberFamily& fibers() const { return fibers_; }
  const MetricSpace& space() const { return fibers_.space(); }

  // f_omega(x), reading the path's coordinate 0.
  double apply_fiber(const SymbolPath& path, double x) const;

  // n-step forward composition f_{theta^{n-1} omega} o ... o f_omega (x).
  double iterate(std::int64_t n, const SymbolPath& path, double x) const;

  // One application of the skew map (omega, x) -> (theta omega, f_omega(x)).
  std::pair<SymbolPath, double> skew_step(const SymbolPath& path, double x) const;

  // f_{theta^{-1} omega} o ... o f_{theta^{-n} omega} (p), reading
  // coordinates -1..-n. Requires an invertible base and n >= 1.
  double pullback_compose(const SymbolPath& path, std::int64_t n, double p) const;

  // f_omega o f_{sigma omega} o ... o f_{sigma^n omega} (p), reading
  // coordinates 0..n. Works on one-sided bases; n >= 0.
  double reversed_forward_compose(const SymbolPath& path, std::int64_t n, double p) const;

  // Element-wise n-step forward images or depth-n pullbacks of the seeds.
  std::vector<double> image_points(const SymbolPath& path, std::int64_t n,
                                   const std::vector<double>& seeds,
                                   Direction direction) const;

 private:
  BaseSystem base_;
  FiberFamily fibers_;
};

// Scans an eps-net (all points, for finite spaces) for a point fixed by
// every positive-weight fiber map; exact on finite spaces, within tol on
// continuum spaces. Returns the point if one is found.
std::optional<double> common_fixed_point(const RandomProduct& rp, double net_eps = 1e-3,
                                         double tol = 1e-9);

}  // namespace syncav
