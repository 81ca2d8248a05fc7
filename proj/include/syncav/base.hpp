#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "syncav/rational.hpp"

namespace syncav {

// Produces the symbol at an absolute coordinate of one realization.
// Implementations must be thread-safe for concurrent const reads and must
// return the same symbol for the same index every time; the whole toolkit
// relies on realizations being a pure value of (seed, index).
class PathSource {
 public:
  virtual ~PathSource() = default;
  virtual int symbol_at(std::int64_t index) const = 0;
  virtual bool two_sided() const = 0;
  virtual int alphabet_size() const = 0;
};

// One realization of the base system, addressed by integer coordinates.
// Shifting only moves the origin; no symbol is ever resampled, so deep
// pasts stay reproducible no matter in which order they are read.
class SymbolPath {
 public:
  SymbolPath(std::shared_ptr<const PathSource> source, std::int64_t origin = 0);

  // Coordinate i of this path. One-sided paths reject i < 0.
  int symbol(std::int64_t i) const;

  // Path reading coordinate i as this path's coordinate i + k.
  // Throws std::invalid_argument for k < 0 on a one-sided path.
  SymbolPath shifted(std::int64_t k) const;

  // One-sided path agreeing with this one on coordinates >= 0.
  // Identity on paths that are already one-sided.
  SymbolPath truncated_to_future() const;

  // (1/n) * #{ 0 <= i < n : coordinate i == s }. Throws std::domain_error
  // if s is not in the alphabet, std::invalid_argument if n < 1.
  double frequency(std::int64_t n, int s) const;

  bool two_sided() const { return source_->two_sided(); }
  int alphabet_size() const { return source_->alphabet_size(); }
  std::int64_t origin() const { return origin_; }
  std::shared_ptr<const PathSource> source() const { return source_; }

 private:
  std::shared_ptr<const PathSource> source_;
  std::int64_t origin_;
};

// Splices a fresh future onto an existing past: coordinates < 0 of `path`
// are kept, coordinates >= 0 come from a new realization of the same base
// drawn from `future_seed`. Used by the past-measurability checks.
SymbolPath replace_future(const SymbolPath& path, const class BaseSystem& base,
                          std::uint64_t future_seed);

// Measure-preserving base system driving the random product: Bernoulli
// shifts (one- and two-sided), two-sided Markov shifts, and finite
// permutation bases with uniform weights.
class BaseSystem {
 public:
  enum class Kind {
    TwoSidedBernoulli,
    OneSidedBernoulli,
    MarkovShift,
    FinitePermutation,
  };

  static BaseSystem bernoulli(bool two_sided, std::vector<Rational> weights,
                              std::vector<std::string> alphabet = {});
  // Row-stochastic matrix; the stationary vector is computed and validated
  // against v M = v. Two-sided; negative coordinates use the reversed chain.
  static BaseSystem markov(std::vector<std::vector<double>> matrix,
                           std::vector<std::string> alphabet = {});
  // theta as a permutation of {0..n-1}; weights are uniform.
  static BaseSystem finite_permutation(std::vector<int> permutation,
                                       std::vector<std::string> alphabet = {});

  Kind kind() const { return kind_; }
  bool invertible() const { return invertible_; }
  int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<Rational>& weights() const { return weights_; }
  double weight_of(int symbol) const { return weights_d_[symbol]; }
  const std::vector<int>& permutation() const { return permutation_; }
  const std::vector<std::vector<double>>& markov_matrix() const { return markov_; }
  const std::vector<double>& stationary() const { return stationary_; }

  // Fresh realization. Identical seed => coordinate-identical path.
  SymbolPath sample_path(std::uint64_t seed) const;

  // Finite-permutation bases only: the deterministic path with
  // coordinate i = theta^i(state).
  SymbolPath path_from_state(int state) const;

 private:
  BaseSystem() = default;

  Kind kind_ = Kind::TwoSidedBernoulli;
  bool invertible_ = true;
  std::vector<std::string> alphabet_;
  std::vector<Rational> weights_;     // bernoulli weights / uniform for finite
  std::vector<double> weights_d_;
  std::vector<std::vector<double>> markov_;
  std::vector<double> stationary_;
  std::vector<int> permutation_;
};

}  // namespace syncav
