#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <vector>

#include "syncav/base.hpp"
#include "syncav/rng.hpp"

using namespace syncav;

namespace {

BaseSystem fair_coin(bool two_sided = true) {
  return BaseSystem::bernoulli(two_sided, {Rational(1, 2), Rational(1, 2)});
}

BaseSystem example_2_1_base() {
  return BaseSystem::finite_permutation({1, 0}, {"1", "2"});
}

}  // namespace

TEST_CASE("shift composes and inverts on two-sided paths") {
  const auto path = fair_coin().sample_path(42);
  const auto round_trip = path.shifted(3).shifted(-3);
  for (std::int64_t i = -20; i <= 20; ++i) CHECK(round_trip.symbol(i) == path.symbol(i));

  // coordinate semantics: shift(w,1) coordinate 0 is w_1
  CHECK(path.shifted(1).symbol(0) == path.symbol(1));
  for (std::int64_t k = -5; k <= 5; ++k)
    for (std::int64_t i = -8; i <= 8; ++i)
      CHECK(path.shifted(k).symbol(i) == path.symbol(i + k));
}

TEST_CASE("shift rejects negative k on one-sided bases") {
  const auto path = fair_coin(false).sample_path(1);
  CHECK_THROWS_AS(path.shifted(-1), std::invalid_argument);
  CHECK_THROWS_AS(path.symbol(-1), std::domain_error);
  CHECK_NOTHROW(path.shifted(2));
}

TEST_CASE("sampling is deterministic in the seed") {
  const auto base = fair_coin();
  const auto a = base.sample_path(1234);
  const auto b = base.sample_path(1234);
  const auto c = base.sample_path(1235);
  bool all_equal = true, any_diff = false;
  for (std::int64_t i = -200; i <= 200; ++i) {
    all_equal = all_equal && a.symbol(i) == b.symbol(i);
    any_diff = any_diff || a.symbol(i) != c.symbol(i);
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("fair coin frequency lands near 1/2 at n = 1e5") {
  const auto path = fair_coin().sample_path(7);
  // independent count, not the frequency helper
  std::int64_t zeros = 0;
  const std::int64_t n = 100000;
  for (std::int64_t i = 0; i < n; ++i) zeros += path.symbol(i) == 0 ? 1 : 0;
  const double freq = double(zeros) / double(n);
  CHECK(freq >= 0.49);
  CHECK(freq <= 0.51);
  CHECK(path.frequency(n, 0) == doctest::Approx(freq).epsilon(1e-15));
}

TEST_CASE("biased coin frequency matches its weight") {
  const auto base = BaseSystem::bernoulli(true, {Rational(3, 10), Rational(7, 10)});
  const auto path = base.sample_path(99);
  CHECK(std::abs(path.frequency(100000, 0) - 0.3) <= 0.01);
  CHECK(std::abs(path.frequency(100000, 1) - 0.7) <= 0.01);
  CHECK_THROWS_AS(path.frequency(10, 5), std::domain_error);
  CHECK_THROWS_AS(path.frequency(0, 0), std::invalid_argument);
}

TEST_CASE("period-2 base walks its cycle exactly") {
  const auto base = example_2_1_base();
  const auto path = base.path_from_state(0);
  // theta(1)=2, theta(2)=1: the path alternates and shifting by 2 is identity
  for (std::int64_t i = -6; i <= 6; ++i) {
    CHECK(path.symbol(i) == (((i % 2) + 2) % 2 == 0 ? 0 : 1));
    CHECK(path.shifted(2).symbol(i) == path.symbol(i));
  }
  const auto sampled = base.sample_path(5);
  for (std::int64_t i = 0; i < 10; ++i) CHECK(sampled.symbol(i) != sampled.symbol(i + 1));
}

TEST_CASE("constant path has frequency one for its symbol") {
  const auto base = BaseSystem::finite_permutation({0, 1});
  const auto path = base.path_from_state(1);
  CHECK(path.frequency(17, 1) == 1.0);
  CHECK(path.frequency(17, 0) == 0.0);
}

TEST_CASE("truncation keeps the future and forgets the past") {
  const auto base = fair_coin();
  const auto path = base.sample_path(31);
  const auto future = path.truncated_to_future();
  CHECK_FALSE(future.two_sided());
  for (std::int64_t i = 0; i < 10; ++i) CHECK(future.symbol(i) == path.symbol(i));
  CHECK_THROWS_AS(future.symbol(-1), std::domain_error);

  // two paths differing only in the past truncate identically
  const auto rewritten = replace_future(path, base, 777);
  for (std::int64_t i = 0; i < 50; ++i)
    CHECK(rewritten.truncated_to_future().symbol(i) ==
          base.sample_path(777).symbol(i));

  // truncate(shift(w,1)) == shift(truncate(w),1) on coordinates >= 0
  const auto lhs = path.shifted(1).truncated_to_future();
  const auto rhs = path.truncated_to_future().shifted(1);
  for (std::int64_t i = 0; i < 30; ++i) CHECK(lhs.symbol(i) == rhs.symbol(i));

  // idempotent on one-sided paths
  const auto one_sided = fair_coin(false).sample_path(3);
  const auto again = one_sided.truncated_to_future();
  for (std::int64_t i = 0; i < 20; ++i) CHECK(again.symbol(i) == one_sided.symbol(i));
}

TEST_CASE("replace_future keeps the past bit-identical") {
  const auto base = fair_coin();
  const auto path = base.sample_path(8).shifted(5);
  const auto spliced = replace_future(path, base, 1001);
  for (std::int64_t i = -40; i < 0; ++i) CHECK(spliced.symbol(i) == path.symbol(i));
  bool changed = false;
  for (std::int64_t i = 0; i < 64; ++i) changed = changed || spliced.symbol(i) != path.symbol(i);
  CHECK(changed);
}

TEST_CASE("window statistics are shift-stationary") {
  const auto base = fair_coin();
  std::map<int, int> at0, at3;
  const int trials = 10000;
  for (int s = 0; s < trials; ++s) {
    const auto path = base.sample_path(derive_seed(900, s));
    at0[path.symbol(0) * 2 + path.symbol(1)]++;
    at3[path.symbol(3) * 2 + path.symbol(4)]++;
  }
  double tv = 0.0;
  for (int pattern = 0; pattern < 4; ++pattern)
    tv += std::abs(double(at0[pattern]) - double(at3[pattern])) / double(trials);
  CHECK(tv / 2.0 <= 0.05);
}

TEST_CASE("markov paths are stationary through zero") {
  const std::vector<std::vector<double>> m = {{0.9, 0.1}, {0.4, 0.6}};
  const auto base = BaseSystem::markov(m);
  // stationary solves v = vM: v = (0.8, 0.2)
  CHECK(base.stationary()[0] == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(base.stationary()[1] == doctest::Approx(0.2).epsilon(1e-12));

  // the reversed-chain negative coordinates keep pair frequencies at
  // v_i M_ij on both sides of the origin
  std::map<int, int> neg_pairs, pos_pairs;
  const int trials = 20000;
  for (int s = 0; s < trials; ++s) {
    const auto path = base.sample_path(derive_seed(4242, s));
    neg_pairs[path.symbol(-2) * 2 + path.symbol(-1)]++;
    pos_pairs[path.symbol(1) * 2 + path.symbol(2)]++;
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double expect = base.stationary()[i] * m[i][j];
      CHECK(double(neg_pairs[i * 2 + j]) / trials == doctest::Approx(expect).epsilon(0.12));
      CHECK(double(pos_pairs[i * 2 + j]) / trials == doctest::Approx(expect).epsilon(0.12));
    }

  // determinism and shift coherence hold for markov paths too
  const auto p1 = base.sample_path(5);
  const auto p2 = base.sample_path(5);
  for (std::int64_t i = -30; i <= 30; ++i) {
    CHECK(p1.symbol(i) == p2.symbol(i));
    CHECK(p1.shifted(7).symbol(i) == p1.symbol(i + 7));
  }
}

TEST_CASE("base validation rejects malformed systems") {
  CHECK_THROWS_AS(BaseSystem::bernoulli(true, {Rational(9, 20), Rational(9, 20)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(BaseSystem::bernoulli(true, {Rational(-1, 2), Rational(3, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(BaseSystem::finite_permutation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(BaseSystem::markov({{0.5, 0.4}, {0.5, 0.5}}), std::invalid_argument);
  CHECK_FALSE(BaseSystem::bernoulli(false, {Rational(1)}).invertible());
  CHECK(example_2_1_base().invertible());
}
