#pragma once

#include <cstdint>
#include <vector>

#include "strongsidon/construction.hpp"

namespace strongsidon {

/// A draw of R_delta restricted to [1, n_max]: each m included
/// independently with probability m^(delta-1). 1 is always a member.
struct RandomSample {
  double delta = 1.0;
  std::uint64_t n_max = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> members;  // sorted
};

/// The integer interval I_i = N intersect [i^(1/delta), (i+1)^(1/delta)).
struct IntervalIndex {
  std::uint64_t i = 0;
  BigInt lower;            // ceil(i^(1/delta))
  BigInt upper_exclusive;  // ceil((i+1)^(1/delta))

  BigInt size() const { return upper_exclusive - lower; }
};

RandomSample sample_r_delta(double delta, std::uint64_t n_max,
                            std::uint64_t seed);

/// Endpoints computed exactly when delta is a small rational a/b (the
/// smallest m with m^a >= i^b), guarded floating point otherwise.
IntervalIndex interval(std::uint64_t i, double delta);

/// The unique i with lower(i) <= m < lower(i+1).
std::uint64_t interval_of(const BigInt& m, double delta);

/// 1 - prod_{m in I_i} (1 - m^(delta-1)), the exact hit probability.
double intersection_probability(std::uint64_t i, double delta);

/// Least i0 <= i_cap with intersection_probability(i, delta) >= 1/3 for
/// every i0 <= i <= i_cap. Empirical, not the existence proof's constant.
/// Throws NotFound if the tail never stabilizes above 1/3.
std::uint64_t find_i0(double delta, std::uint64_t i_cap);

/// Fraction of `trials` independent draws of R_delta restricted to I_i
/// that hit the interval.
double monte_carlo_hit_frequency(std::uint64_t i, double delta,
                                 std::uint64_t trials, std::uint64_t seed);

/// Strong-set-to-random-set transfer: thin the strong set to one element
/// per interval (keeping the smaller of two), drop intervals below
/// find_i0 or missed by the sample, and shift each survivor to the
/// smallest sample member of its interval. The result is a subset of the
/// sample and a plain B_h set.
/// Requires strong.params = (1-delta, gamma >= h 2^(1/delta)) and the
/// verifier to pass at the materialized scale; throws ParamMismatch.
std::vector<std::uint64_t> transfer(const ConstructedSet& strong,
                                    const RandomSample& sample);

/// sqrt((h-1+(1-delta)/2)^2 + delta) - (h-1+(1-delta)/2); equals
/// optimal_c(1-delta, h).
double random_exponent(double delta, int h);

}  // namespace strongsidon
