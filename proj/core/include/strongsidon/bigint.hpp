#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace strongsidon {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt pow2(unsigned long exp) { return pow_big(BigInt(2), exp); }

inline bool divides(const BigInt& d, const BigInt& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// floor(n^(1/k)), n >= 0
inline BigInt iroot(const BigInt& n, unsigned long k) {
  BigInt r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline std::string to_dec(const BigInt& n) { return n.get_str(10); }

inline BigInt from_dec(const std::string& s) { return BigInt(s, 10); }

}  // namespace strongsidon
