#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "strongsidon/base_arith.hpp"
#include "strongsidon/errors.hpp"

namespace strongsidon {

/// Base of the logarithm in f(c,k). The choice only shifts the partition
/// boundaries; natural log is the default (see --f-log-base).
enum class LogBase { e, two, ten };

double log_in_base(double x, LogBase base);

/// f(c,k) = c k^2 / sqrt(log k), log taken in `base`.
double f_ck(double c, int k, LogBase base = LogBase::e);

/// Primes p with 2^(c(k-1)^2 - f(c,k-1)) < p <= 2^(ck^2 - f(c,k)),
/// materialized for 3 <= k <= k_max. Boundaries telescope, so the parts
/// are disjoint and cover every prime up to the cap.
struct PrimePartition {
  double c = 0.0;
  LogBase log_base = LogBase::e;

  struct Part {
    double lower_exponent = 0.0;
    double upper_exponent = 0.0;
    std::vector<std::uint64_t> primes;
  };
  std::map<int, Part> parts;  // k -> part

  // largest integer covered: floor(2^upper_exponent(k_max))
  std::uint64_t cap = 0;

  // the unique k with p in P_{k,c}, or 0 if p > cap
  int part_of(std::uint64_t p) const;
};

PrimePartition prime_partition(double c, int k_max,
                               LogBase base = LogBase::e);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// All primes <= limit. Segmented sieve above 2^26, plain below.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// Multiplicative order of a modulo prime q (a not divisible by q).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q);

/// Smallest primitive root of F_q^*. Throws NotPrime.
std::uint64_t primitive_root(std::uint64_t q);

/// Baby-step giant-step: the unique e in [0, q-2] with g^e = target mod q.
/// Throws NoLogarithm if target = 0 mod q.
std::uint64_t discrete_log(std::uint64_t target, std::uint64_t g,
                           std::uint64_t q);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t mod);

enum class BasisStrategy { smallest, uniform_random };

/// Basis of `count` primes, one per dyadic window (2^(2i-1), 2^(2i+1)].
/// `smallest` picks the least prime in each window; `uniform_random` draws
/// each q_i' uniformly among the window's primes, seeded.
GeneralizedBasis basis_primes(int count, int h, BasisStrategy strategy,
                              std::uint64_t seed = 0);

}  // namespace strongsidon
