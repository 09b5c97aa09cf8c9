#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "strongsidon/bigint.hpp"
#include "strongsidon/errors.hpp"

namespace strongsidon {

/// S(n) measured at a sorted list of checkpoints, plus a least-squares
/// growth exponent fitted over a (n_lo, n_hi) window in log-log space.
struct CountingProfile {
  std::vector<BigInt> checkpoints;
  std::vector<std::uint64_t> counts;
  double fitted_exponent = 0.0;
  std::pair<BigInt, BigInt> window;
};

/// counts[j] = |{s in elements : s <= checkpoints[j]}|; the fitted
/// exponent uses the default window (smallest decade of n discarded).
CountingProfile counting_function(const std::vector<BigInt>& elements,
                                  const std::vector<BigInt>& checkpoints);

/// Ordinary least-squares slope of (log n, log S(n)) over checkpoints in
/// [window.first, window.second] with count >= 1. Throws InsufficientData
/// if fewer than two such checkpoints exist.
double estimate_exponent(const CountingProfile& profile,
                         const std::pair<BigInt, BigInt>& window);

/// Geometric schedule n_j = floor(2^(j/2)), deduplicated, covering
/// [1, limit].
std::vector<BigInt> geometric_checkpoints(const BigInt& limit);

}  // namespace strongsidon
