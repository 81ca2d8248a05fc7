#include "syncav/base.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <stdexcept>

#include "syncav/rng.hpp"

namespace syncav {

namespace {

int pick_from_cumulative(const std::vector<double>& cum, double u) {
  const auto it = std::upper_bound(cum.begin(), cum.end(), u);
  const auto idx = static_cast<int>(it - cum.begin());
  return std::min(idx, static_cast<int>(cum.size()) - 1);
}

std::vector<double> cumulative(const std::vector<double>& w) {
  std::vector<double> cum(w.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc += w[i];
    cum[i] = acc;
  }
  cum.back() = 1.0;
  return cum;
}

class BernoulliSource final : public PathSource {
 public:
  BernoulliSource(std::uint64_t seed, std::vector<double> cum, bool two_sided)
      : seed_(seed), cum_(std::move(cum)), two_sided_(two_sided) {}

  int symbol_at(std::int64_t index) const override {
    return pick_from_cumulative(cum_, unit_uniform(seed_, index));
  }
  bool two_sided() const override { return two_sided_; }
  int alphabet_size() const override { return static_cast<int>(cum_.size()); }

 private:
  std::uint64_t seed_;
  std::vector<double> cum_;
  bool two_sided_;
};

// Coordinate 0 is drawn from the stationary vector; indices grow forward
// through the transition matrix and backward through the reversed chain
// v_j M_{ji} / v_i, so every finite window is stationary. The draw at
// index i always consumes unit_uniform(seed, i), which makes the chain
// independent of materialization order.
class MarkovSource final : public PathSource {
 public:
  MarkovSource(std::uint64_t seed, std::vector<std::vector<double>> fwd_cum,
               std::vector<std::vector<double>> bwd_cum,
               std::vector<double> stationary_cum)
      : seed_(seed),
        fwd_cum_(std::move(fwd_cum)),
        bwd_cum_(std::move(bwd_cum)),
        stationary_cum_(std::move(stationary_cum)) {}

  int symbol_at(std::int64_t index) const override {
    std::lock_guard<std::mutex> lock(mu_);
    if (forward_.empty())
      forward_.push_back(pick_from_cumulative(stationary_cum_, unit_uniform(seed_, 0)));
    while (static_cast<std::int64_t>(forward_.size()) <= std::max<std::int64_t>(index, 0)) {
      const auto i = static_cast<std::int64_t>(forward_.size());
      forward_.push_back(
          pick_from_cumulative(fwd_cum_[forward_.back()], unit_uniform(seed_, i)));
    }
    while (static_cast<std::int64_t>(backward_.size()) < -std::min<std::int64_t>(index, 0)) {
      const auto i = -static_cast<std::int64_t>(backward_.size()) - 1;
      const int next = backward_.empty() ? forward_.front() : backward_.back();
      backward_.push_back(pick_from_cumulative(bwd_cum_[next], unit_uniform(seed_, i)));
    }
    return index >= 0 ? forward_[static_cast<std::size_t>(index)]
                      : backward_[static_cast<std::size_t>(-index - 1)];
  }
  bool two_sided() const override { return true; }
  int alphabet_size() const override { return static_cast<int>(fwd_cum_.size()); }

 private:
  std::uint64_t seed_;
  std::vector<std::vector<double>> fwd_cum_;
  std::vector<std::vector<double>> bwd_cum_;
  std::vector<double> stationary_cum_;
  mutable std::mutex mu_;
  mutable std::deque<int> forward_;   // indices 0, 1, 2, ...
  mutable std::deque<int> backward_;  // indices -1, -2, ...
};

// Coordinate i is theta^i(state); the cycle through the initial state is
// precomputed so lookups are O(1) for arbitrarily deep indices.
class FinitePermutationSource final : public PathSource {
 public:
  FinitePermutationSource(const std::vector<int>& perm, int state, int alphabet)
      : alphabet_(alphabet) {
    int s = state;
    do {
      cycle_.push_back(s);
      s = perm[static_cast<std::size_t>(s)];
    } while (s != state);
  }

  int symbol_at(std::int64_t index) const override {
    const auto len = static_cast<std::int64_t>(cycle_.size());
    const std::int64_t m = ((index % len) + len) % len;
    return cycle_[static_cast<std::size_t>(m)];
  }
  bool two_sided() const override { return true; }
  int alphabet_size() const override { return alphabet_; }

 private:
  std::vector<int> cycle_;
  int alphabet_;
};

class TruncatedSource final : public PathSource {
 public:
  TruncatedSource(std::shared_ptr<const PathSource> inner, std::int64_t base_origin)
      : inner_(std::move(inner)), base_origin_(base_origin) {}

  int symbol_at(std::int64_t index) const override {
    return inner_->symbol_at(base_origin_ + index);
  }
  bool two_sided() const override { return false; }
  int alphabet_size() const override { return inner_->alphabet_size(); }

 private:
  std::shared_ptr<const PathSource> inner_;
  std::int64_t base_origin_;
};

class SplicedSource final : public PathSource {
 public:
  SplicedSource(std::shared_ptr<const PathSource> past,
                std::shared_ptr<const PathSource> future, std::int64_t boundary)
      : past_(std::move(past)), future_(std::move(future)), boundary_(boundary) {}

  int symbol_at(std::int64_t index) const override {
    return index < boundary_ ? past_->symbol_at(index)
                             : future_->symbol_at(index - boundary_);
  }
  bool two_sided() const override { return past_->two_sided(); }
  int alphabet_size() const override { return past_->alphabet_size(); }

 private:
  std::shared_ptr<const PathSource> past_;
  std::shared_ptr<const PathSource> future_;
  std::int64_t boundary_;
};

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

// Stationary vector of a row-stochastic matrix by Gaussian elimination on
// (M^T - I) v = 0 with the normalization row sum(v) = 1.
std::vector<double> stationary_of(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[j][i] - (i == j ? 1.0 : 0.0);
  }
  for (std::size_t j = 0; j < n; ++j) a[n - 1][j] = 1.0;
  a[n - 1][n] = 1.0;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-14)
      throw std::invalid_argument("markov matrix has no unique stationary vector");
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a[i][n] / a[i][i];
  return v;
}

}  // namespace

SymbolPath::SymbolPath(std::shared_ptr<const PathSource> source, std::int64_t origin)
    : source_(std::move(source)), origin_(origin) {}

int SymbolPath::symbol(std::int64_t i) const {
  if (!two_sided() && i < 0)
    throw std::domain_error("negative coordinate on a one-sided path");
  return source_->symbol_at(origin_ + i);
}

SymbolPath SymbolPath::shifted(std::int64_t k) const {
  if (!two_sided() && k < 0)
    throw std::invalid_argument("negative shift on a one-sided base");
  return SymbolPath(source_, origin_ + k);
}

SymbolPath SymbolPath::truncated_to_future() const {
  if (!two_sided()) return *this;
  return SymbolPath(std::make_shared<TruncatedSource>(source_, origin_), 0);
}

double SymbolPath::frequency(std::int64_t n, int s) const {
  if (n < 1) throw std::invalid_argument("frequency needs n >= 1");
  if (s < 0 || s >= alphabet_size())
    throw std::domain_error("symbol outside the alphabet");
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < n; ++i)
    if (symbol(i) == s) ++count;
  return static_cast<double>(count) / static_cast<double>(n);
}

SymbolPath replace_future(const SymbolPath& path, const BaseSystem& base,
                          std::uint64_t future_seed) {
  const SymbolPath fresh = base.sample_path(future_seed);
  return SymbolPath(std::make_shared<SplicedSource>(path.source(), fresh.source(),
                                                    path.origin()),
                    path.origin());
}

BaseSystem BaseSystem::bernoulli(bool two_sided, std::vector<Rational> weights,
                                 std::vector<std::string> alphabet) {
  if (weights.empty()) throw std::invalid_argument("empty weight vector");
  Rational sum(0);
  for (const auto& w : weights) {
    if (w < Rational(0)) throw std::invalid_argument("negative weight");
    sum = sum + w;
  }
  if (sum != Rational(1)) throw std::invalid_argument("weights do not sum to 1");
  if (alphabet.empty()) alphabet = default_labels(weights.size());
  if (alphabet.size() != weights.size())
    throw std::invalid_argument("alphabet/weights size mismatch");

  BaseSystem b;
  b.kind_ = two_sided ? Kind::TwoSidedBernoulli : Kind::OneSidedBernoulli;
  b.invertible_ = two_sided;
  b.alphabet_ = std::move(alphabet);
  b.weights_ = std::move(weights);
  b.weights_d_.reserve(b.weights_.size());
  for (const auto& w : b.weights_) b.weights_d_.push_back(w.to_double());
  return b;
}

BaseSystem BaseSystem::markov(std::vector<std::vector<double>> matrix,
                              std::vector<std::string> alphabet) {
  const std::size_t n = matrix.size();
  if (n == 0) throw std::invalid_argument("empty markov matrix");
  for (const auto& row : matrix) {
    if (row.size() != n) throw std::invalid_argument("markov matrix is not square");
    double s = 0.0;
    for (double p : row) {
      if (p < 0.0) throw std::invalid_argument("negative transition probability");
      s += p;
    }
    if (std::abs(s - 1.0) > 1e-12)
      throw std::invalid_argument("markov matrix row does not sum to 1");
  }
  std::vector<double> v = stationary_of(matrix);
  for (std::size_t i = 0; i < n; ++i) {
    double vm = 0.0;
    for (std::size_t j = 0; j < n; ++j) vm += v[j] * matrix[j][i];
    if (std::abs(vm - v[i]) > 1e-10)
      throw std::invalid_argument("stationary vector check vM = v failed");
  }
  if (alphabet.empty()) alphabet = default_labels(n);
  if (alphabet.size() != n)
    throw std::invalid_argument("alphabet/matrix size mismatch");

  BaseSystem b;
  b.kind_ = Kind::MarkovShift;
  b.invertible_ = true;
  b.alphabet_ = std::move(alphabet);
  b.markov_ = std::move(matrix);
  b.stationary_ = std::move(v);
  b.weights_.assign(n, Rational(0));
  b.weights_d_ = b.stationary_;
  return b;
}

BaseSystem BaseSystem::finite_permutation(std::vector<int> permutation,
                                          std::vector<std::string> alphabet) {
  const std::size_t n = permutation.size();
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(n, false);
  for (int p : permutation) {
    if (p < 0 || p >= static_cast<int>(n) || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  if (alphabet.empty()) alphabet = default_labels(n);
  if (alphabet.size() != n)
    throw std::invalid_argument("alphabet/permutation size mismatch");

  BaseSystem b;
  b.kind_ = Kind::FinitePermutation;
  b.invertible_ = true;
  b.alphabet_ = std::move(alphabet);
  b.permutation_ = std::move(permutation);
  b.weights_.assign(n, Rational(1, static_cast<std::int64_t>(n)));
  b.weights_d_.assign(n, 1.0 / static_cast<double>(n));
  return b;
}

SymbolPath BaseSystem::sample_path(std::uint64_t seed) const {
  switch (kind_) {
    case Kind::TwoSidedBernoulli:
    case Kind::OneSidedBernoulli:
      return SymbolPath(std::make_shared<BernoulliSource>(
          seed, cumulative(weights_d_), invertible_));
    case Kind::MarkovShift: {
      const std::size_t n = markov_.size();
      std::vector<std::vector<double>> fwd(n), bwd(n);
      for (std::size_t i = 0; i < n; ++i) {
        fwd[i] = cumulative(markov_[i]);
        std::vector<double> rev(n);
        for (std::size_t j = 0; j < n; ++j)
          rev[j] = stationary_[j] * markov_[j][i] / stationary_[i];
        bwd[i] = cumulative(rev);
      }
      return SymbolPath(std::make_shared<MarkovSource>(
          seed, std::move(fwd), std::move(bwd), cumulative(stationary_)));
    }
    case Kind::FinitePermutation: {
      const int state = static_cast<int>(unit_uniform(seed, 0) *
                                         static_cast<double>(permutation_.size()));
      return path_from_state(std::min(state, alphabet_size() - 1));
    }
  }
  throw std::logic_error("unreachable");
}

SymbolPath BaseSystem::path_from_state(int state) const {
  if (kind_ != Kind::FinitePermutation)
    throw std::domain_error("path_from_state on a non-finite base");
  if (state < 0 || state >= alphabet_size())
    throw std::domain_error("state outside the base alphabet");
  return SymbolPath(
      std::make_shared<FinitePermutationSource>(permutation_, state, alphabet_size()));
}

}  // namespace syncav
