#pragma once

#include <cstdint>
#include <vector>

#include "strongsidon/construction.hpp"
#include "strongsidon/violation.hpp"

namespace strongsidon {

inline constexpr std::size_t kDefaultMemBudget = 2ull << 30;  // 2 GiB

/// Every violating pair of h-multisets with distinct maxima:
/// gap < gamma * (largest involved element)^alpha. Common elements are
/// cancelled before reporting (the sides of a report are disjoint).
/// Empty result <=> the set is (alpha,gamma)-strong B_h at this scale.
/// Throws TooLarge if the h-fold sum table would exceed `mem_budget`.
std::vector<ViolationReport> check_strong_bh(
    const std::vector<BigInt>& elements, const StrongParams& params,
    std::size_t mem_budget = kDefaultMemBudget);

/// n-finite variant: pairs of distinct h-multisets (multiset inequality,
/// not the distinct-maxima trigger) with gap < n^alpha.
std::vector<ViolationReport> check_n_finite(
    const std::vector<BigInt>& elements, const BigInt& n, double alpha,
    int h, std::size_t mem_budget = kDefaultMemBudget);

/// Violation diagnostics for constructed elements:
///   ell      largest digit index where the two sides' digit sums differ
///            (0 if none),
///   t        largest i with ell < max(len_i, len_i'),
///   check_ii ell <= sqrt(alpha k1^2 + (log2 h + 1) 2 alpha k1 + log2 gamma) + 1
///            (the bound implied by the digit bands and the threshold),
///   check_iii ell^2 >= (1-c)k_t^2 - c(k_1^2 + ... + k_{t-1}^2),
///   check_iv  q_{ell+1}' ... q_{k1}' divides prod_{i<=t}(p_1...p_i - p_1'...p_i').
/// All booleans hold whenever the hypotheses do; a false value signals a bug.
struct ViolationDiagnostics {
  int ell = 0;
  int t = 0;
  bool check_ii = false;
  bool check_iii = false;
  bool check_iv = false;
};

ViolationDiagnostics classify_violation(const ViolationReport& report,
                                        const ConstructedSet& set);

/// 2 h^(1+1/h) n^((1-alpha)/h), the n-finite cardinality bound.
double finite_upper_bound(const BigInt& n, double alpha, int h);

/// 4 h^(1+1/h) / (2^((1-alpha)/h) - 1), the dyadic-decomposition constant;
/// +infinity at alpha = 1.
double infinite_upper_constant(double alpha, int h);

}  // namespace strongsidon
