#include "strongsidon/base_arith.hpp"

#include <cmath>

#include "strongsidon/prime_tools.hpp"

namespace strongsidon {

BigInt GeneralizedBasis::capacity() const {
  BigInt cap = 1;
  for (std::size_t i = 0; i < size(); ++i) cap *= radix(i);
  return cap;
}

void GeneralizedBasis::validate() const {
  if (h < 2) throw Error("basis: h must be >= 2");
  if (prim_roots.size() != base_primes.size())
    throw Error("basis: one primitive root per prime required");
  for (std::size_t i = 0; i < base_primes.size(); ++i) {
    const std::uint64_t q = base_primes[i];
    const unsigned idx = static_cast<unsigned>(i) + 1;  // 1-based
    const BigInt lo = pow2(2 * idx - 1);
    const BigInt hi = pow2(2 * idx + 1);
    if (!(BigInt(q) > lo && BigInt(q) <= hi))
      throw Error("basis: q_i' outside dyadic window at index " +
                  std::to_string(idx));
    if (!is_prime(q)) throw Error("basis: q_i' not prime");
    if (multiplicative_order(prim_roots[i], q) != q - 1)
      throw Error("basis: g_i is not a primitive root");
  }
}

DigitElement digits(const BigInt& a, const GeneralizedBasis& basis) {
  if (a < 0) throw Error("digits: negative input");
  DigitElement out;
  out.value = a;
  BigInt rest = a;
  std::size_t i = 0;
  while (rest != 0) {
    if (i >= basis.size())
      throw BasisTooShort("digits: value exceeds basis capacity");
    const BigInt q(basis.radix(i));
    BigInt digit, next;
    mpz_fdiv_qr(next.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(),
                q.get_mpz_t());
    out.digits.push_back(digit.get_ui());
    rest = next;
    ++i;
  }
  return out;
}

BigInt from_digits(const std::vector<std::uint64_t>& digit_vec,
                   const GeneralizedBasis& basis) {
  if (digit_vec.size() > basis.size())
    throw BasisTooShort("from_digits: more digits than radices");
  if (!digit_vec.empty() && digit_vec.back() == 0)
    throw InvalidDigit("from_digits: trailing digit is zero");
  BigInt value = 0;
  BigInt weight = 1;
  for (std::size_t i = 0; i < digit_vec.size(); ++i) {
    if (digit_vec[i] >= basis.radix(i))
      throw InvalidDigit("from_digits: digit exceeds radix at index " +
                         std::to_string(i + 1));
    value += BigInt(digit_vec[i]) * weight;
    weight *= basis.radix(i);
  }
  return value;
}

std::pair<BigInt, BigInt> length_bounds(int k, int h) {
  if (k < 1) throw Error("length_bounds: k must be >= 1");
  const BigInt hh(h);
  BigInt lower = pow_big(hh, 2 * k - 2) * pow2(k * k - 2 * k + 1);
  BigInt upper = pow_big(hh, 2 * k) * pow2(k * k + 2 * k);
  return {lower, upper};
}

double alpha_length_bound(int k, int h, double alpha, double gamma) {
  if (k < 1) throw Error("alpha_length_bound: k must be >= 1");
  const double inner = alpha * k * k +
                       (std::log2(static_cast<double>(h)) + 1.0) * 2.0 *
                           alpha * k +
                       std::log2(gamma);
  return std::sqrt(inner);
}

int digit_multiplicity(std::uint64_t x, std::uint64_t q_prime, int h) {
  if (x == 0) return 0;
  const std::uint64_t hq = static_cast<std::uint64_t>(h);
  for (std::uint64_t m = 1; m <= hq; ++m) {
    const std::uint64_t lo = m * (hq - 1) * q_prime + m;
    const std::uint64_t hi = m * hq * q_prime - m;
    if (x >= lo && x <= hi) return static_cast<int>(m);
  }
  throw NotInAnyBand("digit_multiplicity: x=" + std::to_string(x) +
                     " falls between bands for q'=" + std::to_string(q_prime));
}

}  // namespace strongsidon
