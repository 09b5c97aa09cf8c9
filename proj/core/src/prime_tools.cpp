#include "strongsidon/prime_tools.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace strongsidon {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % mod);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // deterministic witness set for the full 64-bit range
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;

  const std::uint64_t plain_cutoff = 1ull << 26;
  const std::uint64_t base_limit =
      static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;

  // small primes up to sqrt(limit), plain sieve
  std::vector<char> small(base_limit + 1, 1);
  small[0] = small[1] = 0;
  for (std::uint64_t i = 2; i * i <= base_limit; ++i)
    if (small[i])
      for (std::uint64_t j = i * i; j <= base_limit; j += i) small[j] = 0;
  std::vector<std::uint64_t> base_primes;
  for (std::uint64_t i = 2; i <= base_limit; ++i)
    if (small[i]) base_primes.push_back(i);

  if (limit <= plain_cutoff) {
    std::vector<char> sieve(limit + 1, 1);
    sieve[0] = sieve[1] = 0;
    for (std::uint64_t p : base_primes)
      for (std::uint64_t j = p * p; j <= limit; j += p) sieve[j] = 0;
    for (std::uint64_t i = 2; i <= limit; ++i)
      if (sieve[i]) primes.push_back(i);
    return primes;
  }

  const std::uint64_t segment_size = 1ull << 22;
  std::vector<char> segment(segment_size);
  for (std::uint64_t low = 2; low <= limit; low += segment_size) {
    const std::uint64_t high = std::min(low + segment_size - 1, limit);
    std::fill(segment.begin(), segment.end(), 1);
    for (std::uint64_t p : base_primes) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t j = start; j <= high; j += p) segment[j - low] = 0;
    }
    for (std::uint64_t i = low; i <= high; ++i)
      if (segment[i - low] && i >= 2) primes.push_back(i);
  }
  return primes;
}

double log_in_base(double x, LogBase base) {
  switch (base) {
    case LogBase::e:
      return std::log(x);
    case LogBase::two:
      return std::log2(x);
    case LogBase::ten:
      return std::log10(x);
  }
  return std::log(x);
}

double f_ck(double c, int k, LogBase base) {
  if (k < 2) throw Error("f_ck: k must be >= 2");
  return c * k * k / std::sqrt(log_in_base(static_cast<double>(k), base));
}

int PrimePartition::part_of(std::uint64_t p) const {
  for (const auto& [k, part] : parts) {
    const std::uint64_t lo =
        part.lower_exponent <= 0.0
            ? 0
            : static_cast<std::uint64_t>(std::exp2(part.lower_exponent));
    const std::uint64_t hi =
        part.upper_exponent <= 0.0
            ? 0
            : static_cast<std::uint64_t>(std::exp2(part.upper_exponent));
    if (p > lo && p <= hi) return k;
  }
  return 0;
}

PrimePartition prime_partition(double c, int k_max, LogBase base) {
  if (!(c > 0.0 && c < 0.5))
    throw InvalidC("prime_partition: c must lie in (0, 1/2)");
  if (k_max < 3) throw Error("prime_partition: k_max must be >= 3");

  PrimePartition partition;
  partition.c = c;
  partition.log_base = base;

  const double top = c * k_max * k_max - f_ck(c, k_max, base);
  if (top > 62.0) throw TooLarge("prime_partition: cap exceeds 2^62");
  partition.cap =
      top <= 0.0 ? 0 : static_cast<std::uint64_t>(std::exp2(top));

  const auto primes = sieve_primes(partition.cap);
  std::size_t cursor = 0;
  for (int k = 3; k <= k_max; ++k) {
    PrimePartition::Part part;
    part.lower_exponent =
        c * (k - 1) * (k - 1) - f_ck(c, k - 1, base);
    part.upper_exponent = c * k * k - f_ck(c, k, base);
    const std::uint64_t lo =
        part.lower_exponent <= 0.0
            ? 0
            : static_cast<std::uint64_t>(std::exp2(part.lower_exponent));
    const std::uint64_t hi =
        part.upper_exponent <= 0.0
            ? 0
            : static_cast<std::uint64_t>(std::exp2(part.upper_exponent));
    while (cursor < primes.size() && primes[cursor] <= lo) ++cursor;
    while (cursor < primes.size() && primes[cursor] <= hi)
      part.primes.push_back(primes[cursor++]);
    partition.parts.emplace(k, std::move(part));
  }
  return partition;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q) {
  if (a % q == 0) throw Error("multiplicative_order: a divisible by q");
  std::uint64_t order = q - 1;
  for (std::uint64_t f : prime_factors(q - 1)) {
    while (order % f == 0 && pow_mod(a, order / f, q) == 1) order /= f;
  }
  return order;
}

std::uint64_t primitive_root(std::uint64_t q) {
  if (!is_prime(q)) throw NotPrime("primitive_root: q is not prime");
  if (q == 2) return 1;
  const auto factors = prime_factors(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool primitive = true;
    for (std::uint64_t f : factors) {
      if (pow_mod(g, (q - 1) / f, q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw Error("primitive_root: none found");  // unreachable for prime q
}

std::uint64_t discrete_log(std::uint64_t target, std::uint64_t g,
                           std::uint64_t q) {
  target %= q;
  if (target == 0)
    throw NoLogarithm("discrete_log: target divisible by modulus");
  if (q == 2) return 0;  // target = 1

  const std::uint64_t n = q - 1;
  const std::uint64_t m = static_cast<std::uint64_t>(
      std::ceil(std::sqrt(static_cast<double>(n))));

  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(m * 2);
  std::uint64_t cur = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);  // keeps smallest j on duplicates
    cur = mul_mod(cur, g, q);
  }

  const std::uint64_t giant_step = pow_mod(g, n - (m % n), q);  // g^-m
  std::uint64_t gamma = target;
  for (std::uint64_t i = 0; i <= m; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) {
      return (i * m + it->second) % n;
    }
    gamma = mul_mod(gamma, giant_step, q);
  }
  throw NoLogarithm("discrete_log: g is not a generator for this target");
}

GeneralizedBasis basis_primes(int count, int h, BasisStrategy strategy,
                              std::uint64_t seed) {
  if (count < 1) throw Error("basis_primes: count must be >= 1");
  if (h < 2) throw Error("basis_primes: h must be >= 2");
  if (count > 28) throw TooLarge("basis_primes: window exceeds 2^57");

  GeneralizedBasis basis;
  basis.h = h;
  basis.strategy =
      strategy == BasisStrategy::smallest ? "smallest" : "random";
  basis.seed = seed;

  std::mt19937_64 rng(seed);
  for (int i = 1; i <= count; ++i) {
    const std::uint64_t lo = 1ull << (2 * i - 1);
    const std::uint64_t hi = 1ull << (2 * i + 1);
    std::uint64_t q = 0;
    if (strategy == BasisStrategy::smallest) {
      for (std::uint64_t cand = lo + 1; cand <= hi; ++cand) {
        if (is_prime(cand)) {
          q = cand;
          break;
        }
      }
    } else {
      const std::uint64_t width = hi - lo;       // 3 * 2^(2i-1)
      const std::uint64_t mask = 2 * hi - 1;     // next power of two - 1
      while (q == 0) {
        const std::uint64_t v = rng() & mask;
        if (v >= width) continue;
        const std::uint64_t cand = lo + 1 + v;
        if (is_prime(cand)) q = cand;
      }
    }
    if (q == 0) throw Error("basis_primes: empty window");  // unreachable
    basis.base_primes.push_back(q);
    basis.prim_roots.push_back(primitive_root(q));
  }
  return basis;
}

}  // namespace strongsidon
