#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "strongsidon/construction.hpp"
#include "strongsidon/verification.hpp"

using namespace strongsidon;

namespace {

// brute-force enumeration of all pairs of h-multisets with distinct
// maxima; counts those with |sum difference| < gamma * (overall max)^alpha
int naive_check_count(const std::vector<std::uint64_t>& values,
                      const StrongParams& params) {
  struct Tuple {
    std::vector<std::size_t> idx;  // non-decreasing
    std::uint64_t sum;
  };
  std::vector<Tuple> tuples;
  std::vector<std::size_t> idx(params.h, 0);
  for (;;) {
    bool nondecreasing = true;
    for (int i = 1; i < params.h; ++i)
      if (idx[i] < idx[i - 1]) nondecreasing = false;
    if (nondecreasing) {
      std::uint64_t sum = 0;
      for (int i = 0; i < params.h; ++i) sum += values[idx[i]];
      tuples.push_back({idx, sum});
    }
    int pos = params.h - 1;
    while (pos >= 0 && ++idx[pos] == values.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  int count = 0;
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    for (std::size_t b = a + 1; b < tuples.size(); ++b) {
      if (tuples[a].idx.back() == tuples[b].idx.back()) continue;
      const std::uint64_t max_val =
          values[std::max(tuples[a].idx.back(), tuples[b].idx.back())];
      const double gap = tuples[a].sum > tuples[b].sum
                             ? tuples[a].sum - tuples[b].sum
                             : tuples[b].sum - tuples[a].sum;
      if (gap < params.gamma * std::pow(double(max_val), params.alpha))
        ++count;
    }
  }
  return count;
}

std::vector<BigInt> to_big(const std::vector<std::uint64_t>& values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

}  // namespace

TEST_CASE("threshold trigger is exact at rational borderlines") {
  // alpha = 1/2, base = 4: threshold is exactly 2
  CHECK_FALSE(violates_threshold(2, 4, 0.5, 1.0));  // gap == threshold: ok
  CHECK(violates_threshold(1, 4, 0.5, 1.0));
  // gamma scales the borderline
  CHECK(violates_threshold(2, 4, 0.5, 1.5));   // threshold 3
  CHECK_FALSE(violates_threshold(3, 4, 0.5, 1.5));
  // alpha = 0: plain gap >= gamma
  CHECK(violates_threshold(0, 1000, 0.0, 1.0));
  CHECK_FALSE(violates_threshold(1, 1000, 0.0, 1.0));
  // huge exact case: base = 2^100, alpha = 1/2 -> threshold 2^50
  const BigInt base = BigInt(1) << 100;
  const BigInt fifty = BigInt(1) << 50;
  CHECK_FALSE(violates_threshold(fifty, base, 0.5, 1.0));
  CHECK(violates_threshold(fifty - 1, base, 0.5, 1.0));
}

TEST_CASE("verifier matches the naive enumerator on random sets") {
  std::mt19937_64 rng(2024);
  int cases = 0;
  while (cases < 60) {
    const int size = 3 + static_cast<int>(rng() % 10);
    std::set<std::uint64_t> pool;
    while (static_cast<int>(pool.size()) < size)
      pool.insert(1 + rng() % 500);
    const std::vector<std::uint64_t> values(pool.begin(), pool.end());
    const int h = 2 + static_cast<int>(cases % 2);
    const double alpha = (cases % 3) * 0.25;
    const double gamma = 1.0 + (cases % 2);
    const StrongParams params{h, alpha, gamma};
    CHECK(static_cast<int>(check_strong_bh(to_big(values), params).size()) ==
          naive_check_count(values, params));
    ++cases;
  }
}

TEST_CASE("verifier reports cancel shared elements") {
  // {1,2,3}: 1+3 = 2+2, maxima 3 vs 2 distinct
  const auto reports = check_strong_bh(to_big({1, 2, 3}), {2, 0.0, 1.0});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].left == std::vector<BigInt>{3, 1});
  CHECK(reports[0].right == std::vector<BigInt>{2, 2});
  CHECK(reports[0].gap == 0);
  CHECK(reports[0].t == 2);
  // {2,3,4}: (2,4) vs (3,3) collide; (3,4) vs (4,4)? shares 4 -> after
  // cancellation t=1 with gap 1 < gamma=2
  const auto r2 = check_strong_bh(to_big({2, 3, 4}), {2, 0.0, 2.0});
  bool found_t1 = false;
  for (const auto& r : r2)
    if (r.t == 1) found_t1 = true;
  CHECK(found_t1);
}

TEST_CASE("verifier validates its input") {
  CHECK_THROWS(check_strong_bh({BigInt(3), BigInt(1)}, {2, 0.0, 1.0}));
  CHECK_THROWS(check_strong_bh({BigInt(0), BigInt(1)}, {2, 0.0, 1.0}));
  CHECK_THROWS_AS(
      check_strong_bh(to_big({1, 2, 3, 5, 8}), {2, 0.0, 1.0}, 100),
      TooLarge);
  CHECK(check_strong_bh({}, {2, 0.0, 1.0}).empty());
  CHECK(check_strong_bh({BigInt(7)}, {2, 0.0, 1.0}).empty());
}

TEST_CASE("gamma growth only adds violations") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::set<std::uint64_t> pool;
    while (pool.size() < 8) pool.insert(1 + rng() % 300);
    const auto values = to_big({pool.begin(), pool.end()});
    const auto narrow = check_strong_bh(values, {2, 0.3, 1.0});
    const auto wide = check_strong_bh(values, {2, 0.3, 2.0});
    CHECK(narrow.size() <= wide.size());
  }
}

TEST_CASE("n-finite check uses the fixed threshold and multiset trigger") {
  // {1,2,3} in [10], alpha=0: threshold 1; 1+3 = 2+2 -> gap 0 violates
  const auto reports = check_n_finite(to_big({1, 2, 3}), 10, 0.0, 2);
  CHECK(reports.size() == 1);
  // alpha=0.5 in [100]: threshold 10; {1,2,3} has many close sums
  const auto wide = check_n_finite(to_big({1, 2, 3}), 100, 0.5, 2);
  CHECK(wide.size() > reports.size());
  // equal-max pairs with different multisets DO trigger here:
  // {1,2,3,4}: (1,4) vs (2,4)? shares 4 but distinct multisets, gap 1
  const auto eq = check_n_finite(to_big({1, 2, 3, 4}), 16, 0.5, 2);
  bool shared_max = false;
  for (const auto& r : eq) {
    if (r.left.size() == 2 && r.right.size() == 2 &&
        r.left[0] == r.right[0])
      shared_max = true;
  }
  CHECK(shared_max);
  CHECK_THROWS_AS(check_n_finite(to_big({1, 20}), 10, 0.0, 2),
                  ElementOutOfRange);
}

TEST_CASE("violation diagnostics hold on seeded constructions") {
  int classified = 0;
  for (std::uint64_t seed = 1; seed <= 6 && classified < 3; ++seed) {
    const StrongParams params{2, 0.2, 1.0};
    const auto basis =
        basis_primes(8, 2, BasisStrategy::uniform_random, seed);
    const auto set = build_set(optimal_c(0.2, 2), params, basis, 8);
    for (const auto& report : find_violations(set)) {
      const auto diag = classify_violation(report, set);
      CHECK(diag.check_ii);
      CHECK(diag.check_iii);
      CHECK(diag.check_iv);
      CHECK(diag.t >= 1);
      ++classified;
    }
  }
  // whether any seed yields violations is data-dependent; the suite is
  // meaningful only when at least one case ran, so record it
  MESSAGE("classified violations: " << classified);
}

TEST_CASE("diagnostics on a hand-built digit collision") {
  // p=5 and p=181 share their discrete log at q_2'=11 (181 = 5 mod 11)
  // but differ at q_1'=3, so their length-2 digit images differ only in
  // the first digit: values 173 and 172, gap 1
  const auto basis = basis_primes(4, 2, BasisStrategy::smallest);
  ConstructedSet set;
  set.params = {2, 0.0, 2.0};
  set.basis = basis;
  set.c = 0.45;
  set.provenance = Provenance::dlog;
  set.elements.emplace(5, element_for_prime(5, 2, basis));
  set.elements.emplace(181, element_for_prime(181, 2, basis));
  REQUIRE(set.elements.at(5).value == 173);
  REQUIRE(set.elements.at(181).value == 172);

  const auto reports = find_violations(set);
  REQUIRE(reports.size() == 1);
  REQUIRE(reports[0].t == 1);
  const auto diag = classify_violation(reports[0], set);
  CHECK(diag.ell == 1);  // digits differ only at index 1
  CHECK(diag.t == 1);
  CHECK(diag.check_ii);
  // divisibility: q_2' = 11 divides 181 - 5 = 176
  CHECK(diag.check_iv);
  // check_iii presumes partition-profile lengths (len >= 3); this
  // hand-built length-2 pair sits outside that regime
}

TEST_CASE("classification requires digit data") {
  ConstructedSet greedy = greedy_strong_bh({2, 0.0, 1.0}, 30);
  ViolationReport report;
  report.left = {BigInt(4), BigInt(1)};
  report.right = {BigInt(2), BigInt(2)};
  report.gap = 1;
  report.t = 2;
  CHECK_THROWS_AS(classify_violation(report, greedy),
                  NotConstructedElements);
}

TEST_CASE("upper-bound formulas evaluate to their closed forms") {
  // 2 * 2^(3/2) * n^(1/2) at n = 10^6 -> 2^(5/2) * 1000
  CHECK(finite_upper_bound(BigInt(1000000), 0.0, 2) ==
        doctest::Approx(std::pow(2.0, 2.5) * 1000.0).epsilon(1e-9));
  CHECK(infinite_upper_constant(0.0, 3) ==
        doctest::Approx(4.0 * std::pow(3.0, 4.0 / 3.0) /
                        (std::pow(2.0, 1.0 / 3.0) - 1.0))
            .epsilon(1e-12));
  CHECK(std::isinf(infinite_upper_constant(1.0, 2)));
  // monotone in alpha: stronger separation forces sparser sets
  CHECK(finite_upper_bound(BigInt(1000), 0.5, 2) <
        finite_upper_bound(BigInt(1000), 0.0, 2));
}
