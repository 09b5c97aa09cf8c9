#pragma once

#include <optional>
#include <vector>

#include "strongsidon/bigint.hpp"

namespace strongsidon {

/// A violating pair of same-length tuples, sides sorted descending,
/// disjoint as multisets, with distinct maxima. `t` is the effective fold
/// after cancelling common elements; `ell` is filled by classify_violation.
struct ViolationReport {
  std::vector<BigInt> left;   // contains the overall maximum
  std::vector<BigInt> right;
  BigInt gap;
  double threshold = 0.0;
  int t = 0;
  std::optional<int> ell;
};

/// Strong-condition trigger: gap < gamma * base^alpha.
/// Exact rational comparison when alpha is p/q with q <= 4 (gamma, a
/// double, is always an exact rational); double precision otherwise, with
/// a +-1 ulp caveat on borderline gaps.
bool violates_threshold(const BigInt& gap, const BigInt& base, double alpha,
                        double gamma);

/// gamma * base^alpha as a double, for reporting.
double threshold_value(const BigInt& base, double alpha, double gamma);

}  // namespace strongsidon
