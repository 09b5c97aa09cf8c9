#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "strongsidon/bigint.hpp"
#include "strongsidon/errors.hpp"

namespace strongsidon {

/// Mixed-radix basis q_bar = (h^2 q_1', h^2 q_2', ...) with one primitive
/// root of F_{q_i'}^* per index. The window 2^(2i-1) < q_i' <= 2^(2i+1)
/// holds for every index (1-based).
struct GeneralizedBasis {
  int h = 2;
  std::vector<std::uint64_t> base_primes;  // q_i'
  std::vector<std::uint64_t> prim_roots;   // g_i, smallest primitive root
  std::string strategy = "smallest";       // "smallest" | "random"
  std::uint64_t seed = 0;

  std::size_t size() const { return base_primes.size(); }

  // q_i = h^2 * q_i', 0-based index
  std::uint64_t radix(std::size_t i) const {
    return static_cast<std::uint64_t>(h) * static_cast<std::uint64_t>(h) *
           base_primes.at(i);
  }

  // q_1 * ... * q_m over all available radices
  BigInt capacity() const;

  // window and primitive-root invariants; throws Error on violation
  void validate() const;
};

/// An integer with its little-endian digit vector in base q_bar.
/// Empty digits <=> value 0; trailing digit nonzero otherwise.
struct DigitElement {
  BigInt value;
  std::vector<std::uint64_t> digits;  // x_1 first

  std::size_t length() const { return digits.size(); }
  bool has_digits() const { return value == 0 || !digits.empty(); }
};

/// Digit expansion of a in the given basis.
/// Throws BasisTooShort if a >= capacity.
DigitElement digits(const BigInt& a, const GeneralizedBasis& basis);

/// Inverse of digits(): evaluates x_1 + x_2 q_1 + ... + x_k q_1...q_{k-1}.
/// Throws InvalidDigit if some x_i >= q_i or the trailing digit is zero.
BigInt from_digits(const std::vector<std::uint64_t>& digit_vec,
                   const GeneralizedBasis& basis);

/// Magnitude bounds implied by length k:
/// (h^(2k-2) 2^(k^2-2k+1), h^(2k) 2^(k^2+2k)).
/// Strict on both sides for k >= 2; a = 1 attains the lower bound at k = 1.
std::pair<BigInt, BigInt> length_bounds(int k, int h);

/// Upper bound on len(floor(gamma * a^alpha)) for any a of length k:
/// sqrt(alpha k^2 + (log2 h + 1) 2 alpha k + log2 gamma).
/// Returns the raw formula value; may be < 1 in degenerate cases
/// (alpha = 0, gamma = 1), callers clamp where a length is needed.
double alpha_length_bound(int k, int h, double alpha, double gamma);

/// Number m of summands with nonzero i-th digit that produce digit x in a
/// sum of at most h constructed elements: the unique m with
/// m(h-1)q' + m <= x <= m h q' - m. Throws NotInAnyBand between bands.
int digit_multiplicity(std::uint64_t x, std::uint64_t q_prime, int h);

}  // namespace strongsidon
