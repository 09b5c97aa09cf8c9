#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "strongsidon/construction.hpp"
#include "strongsidon/random_sets.hpp"
#include "strongsidon/verification.hpp"

using namespace strongsidon;

TEST_CASE("delta=1 keeps every integer and sampling is seeded") {
  const auto full = sample_r_delta(1.0, 200, 7);
  REQUIRE(full.members.size() == 200);
  for (std::uint64_t m = 1; m <= 200; ++m)
    CHECK(full.members[m - 1] == m);

  const auto a = sample_r_delta(0.5, 5000, 42);
  const auto b = sample_r_delta(0.5, 5000, 42);
  const auto c = sample_r_delta(0.5, 5000, 43);
  CHECK(a.members == b.members);
  CHECK(a.members != c.members);
  CHECK(a.members.front() == 1);  // p_1 = 1 always
  CHECK(std::is_sorted(a.members.begin(), a.members.end()));
}

TEST_CASE("sample sizes track the binomial-sum expectation") {
  // E|R_0.5 inside [1, n]| = sum m^(-1/2) ~ 2 sqrt(n); variance is close to
  // the mean, so a 3-sigma band around the expectation catches all seeds
  const std::uint64_t n_max = 1000000;
  double expectation = 0.0, variance = 0.0;
  for (std::uint64_t m = 1; m <= n_max; ++m) {
    const double p = 1.0 / std::sqrt(static_cast<double>(m));
    expectation += p;
    variance += p * (1.0 - p);
  }
  const double sigma = std::sqrt(variance);
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto sample = sample_r_delta(0.5, n_max, seed);
    const double size = static_cast<double>(sample.members.size());
    if (std::abs(size - expectation) <= 3.0 * sigma) ++inside;
  }
  CHECK(inside >= 99);  // P(|Z| > 3) ~ 0.0027 per seed
}

TEST_CASE("interval endpoints are exact for rational delta") {
  // I_2 at delta = 1/2 is {4,...,8}
  const auto i2 = interval(2, 0.5);
  CHECK(i2.lower == 4);
  CHECK(i2.upper_exclusive == 9);
  // delta = 1: singleton {i}
  for (std::uint64_t i : {1ull, 5ull, 123ull}) {
    const auto iv = interval(i, 1.0);
    CHECK(iv.lower == BigInt(i));
    CHECK(iv.size() == 1);
  }
  // perfect-power boundaries must not wobble: i = m^2 at delta = 1/2
  for (std::uint64_t m = 2; m <= 60; ++m) {
    const auto iv = interval(m * m, 0.5);
    CHECK(iv.lower == BigInt(m * m) * BigInt(m * m));
  }
}

TEST_CASE("intervals partition the integers") {
  for (double delta : {0.3, 0.5, 0.8, 1.0}) {
    BigInt expected_next = 1;
    std::uint64_t i = 1;
    while (expected_next <= 1000000) {
      const auto iv = interval(i, delta);
      CHECK(iv.lower == expected_next);  // no gap, no overlap
      CHECK(iv.upper_exclusive > iv.lower);
      // membership query agrees on both edges of the interval
      CHECK(interval_of(iv.lower, delta) == i);
      CHECK(interval_of(iv.upper_exclusive - 1, delta) == i);
      expected_next = iv.upper_exclusive;
      ++i;
    }
  }
}

TEST_CASE("interval sizes obey the power-law bound") {
  for (double delta : {0.3, 0.5, 0.8}) {
    for (std::uint64_t i = 1; i <= 10000; ++i) {
      const auto iv = interval(i, delta);
      const double bound =
          std::exp2(1.0 / delta) *
          std::pow(static_cast<double>(i), 1.0 / delta - 1.0);
      CHECK(iv.size().get_d() < bound);
    }
  }
}

TEST_CASE("exact hit probability matches a direct product") {
  CHECK(intersection_probability(1, 0.5) == 1.0);  // contains m=1
  for (std::uint64_t i = 3; i <= 40; ++i)
    CHECK(intersection_probability(i, 1.0) == 1.0);
  // i=2, delta=1/2: product over {4,...,8}
  double miss = 1.0;
  for (int m = 4; m <= 8; ++m)
    miss *= 1.0 - 1.0 / std::sqrt(static_cast<double>(m));
  CHECK(intersection_probability(2, 0.5) ==
        doctest::Approx(1.0 - miss).epsilon(1e-12));
  CHECK(intersection_probability(2, 0.5) ==
        doctest::Approx(0.934).epsilon(1e-3));
}

TEST_CASE("stabilization index is 1 at moderate densities") {
  CHECK(find_i0(1.0, 100) == 1);
  CHECK(find_i0(0.5, 2000) == 1);
  CHECK(find_i0(0.9, 2000) == 1);
}

TEST_CASE("Monte Carlo frequency approaches the exact probability") {
  for (double delta : {0.5, 0.9}) {
    for (std::uint64_t i = 1; i <= 20; ++i) {
      const double exact = intersection_probability(i, delta);
      const double mc = monte_carlo_hit_frequency(i, delta, 10000, 31 + i);
      CHECK(std::abs(mc - exact) < 0.02);
    }
  }
}

TEST_CASE("strong sets at the two-per-interval gamma are interval-sparse") {
  // any set passing the (1-delta, 2^(1+1/delta))-strong verifier puts at
  // most two elements in any I_i
  const double delta = 0.9;
  StrongParams params{2, 1.0 - delta, std::exp2(1.0 + 1.0 / delta)};
  const auto set = greedy_strong_bh(params, 50000);
  REQUIRE(check_strong_bh(set.sorted_values(), params).empty());
  std::map<std::uint64_t, int> per_interval;
  for (const BigInt& v : set.sorted_values())
    ++per_interval[interval_of(v, delta)];
  for (const auto& [i, count] : per_interval) CHECK(count <= 2);
}

TEST_CASE("transfer yields a plain B_h subset of the sample") {
  const double delta = 0.9;
  const int h = 2;
  StrongParams params{h, 1.0 - delta,
                      2.0 * h * std::exp2(1.0 + 1.0 / delta)};
  const auto strong = greedy_strong_bh(params, 100000);
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const auto sample = sample_r_delta(delta, 100000, seed);
    const auto out = transfer(strong, sample);
    CHECK(std::is_sorted(out.begin(), out.end()));
    for (std::uint64_t m : out)
      CHECK(std::binary_search(sample.members.begin(),
                               sample.members.end(), m));
    std::vector<BigInt> values(out.begin(), out.end());
    CHECK(check_strong_bh(values, {h, 0.0, 1.0}).empty());
    // one element per interval survives
    std::map<std::uint64_t, int> per_interval;
    for (std::uint64_t m : out) ++per_interval[interval_of(m, delta)];
    for (const auto& [i, count] : per_interval) CHECK(count == 1);
  }
}

TEST_CASE("transfer rejects mismatched parameters") {
  const double delta = 0.9;
  const auto sample = sample_r_delta(delta, 1000, 1);
  // wrong alpha
  const auto wrong_alpha = greedy_strong_bh({2, 0.5, 8.0}, 1000);
  CHECK_THROWS_AS(transfer(wrong_alpha, sample), ParamMismatch);
  // right alpha, gamma below h 2^(1/delta)
  const auto weak_gamma = greedy_strong_bh({2, 1.0 - delta, 1.0}, 1000);
  CHECK_THROWS_AS(transfer(weak_gamma, sample), ParamMismatch);
}

TEST_CASE("random-set exponent equals the construction exponent") {
  CHECK(random_exponent(1.0, 2) ==
        doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
  for (int h : {2, 3, 4}) {
    for (int j = 1; j <= 50; ++j) {
      const double delta = j / 50.0;
      CHECK(std::abs(random_exponent(delta, h) -
                     optimal_c(1.0 - delta, h)) < 1e-12);
    }
  }
  // (sqrt(73) - 7) / 6 at delta = 2/3, h = 2
  CHECK(random_exponent(2.0 / 3.0, 2) ==
        doctest::Approx((std::sqrt(73.0) - 7.0) / 6.0).epsilon(1e-12));
}
