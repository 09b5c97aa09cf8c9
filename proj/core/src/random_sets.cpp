#include "strongsidon/random_sets.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "strongsidon/verification.hpp"

namespace strongsidon {

namespace {

// uniform in [0, 1) from the raw 64-bit stream; the standard library's
// distributions are not reproducible across implementations
double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool rationalize(double x, std::uint64_t& num, std::uint64_t& den,
                 std::uint64_t max_den = 100) {
  for (std::uint64_t d = 1; d <= max_den; ++d) {
    const double scaled = x * static_cast<double>(d);
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) < 1e-9 && rounded >= 1.0) {
      num = static_cast<std::uint64_t>(rounded);
      den = d;
      return true;
    }
  }
  return false;
}

// smallest m with m >= x^(1/delta)
BigInt ceil_inv_delta_pow(std::uint64_t x, double delta) {
  std::uint64_t a = 0, b = 0;
  if (rationalize(delta, a, b)) {
    // m >= x^(b/a)  <=>  m^a >= x^b
    const BigInt target = pow_big(BigInt(x), b);
    BigInt r = iroot(target, a);
    if (pow_big(r, a) < target) r += 1;
    return r;
  }
  // guarded floating point: scan a small neighbourhood of the estimate
  const double est = std::pow(static_cast<double>(x), 1.0 / delta);
  BigInt m(std::max(1.0, std::floor(est) - 2.0));
  while (std::exp(delta * std::log(m.get_d())) <
         static_cast<double>(x) * (1.0 - 1e-12))
    m += 1;
  return m;
}

}  // namespace

RandomSample sample_r_delta(double delta, std::uint64_t n_max,
                            std::uint64_t seed) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw InvalidConfig("sample_r_delta: delta must lie in (0, 1]");
  RandomSample sample;
  sample.delta = delta;
  sample.n_max = n_max;
  sample.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::uint64_t m = 1; m <= n_max; ++m) {
    const double p = std::pow(static_cast<double>(m), delta - 1.0);
    if (canonical(rng) < p) sample.members.push_back(m);
  }
  return sample;
}

IntervalIndex interval(std::uint64_t i, double delta) {
  if (i < 1) throw Error("interval: i must be >= 1");
  if (!(delta > 0.0 && delta <= 1.0))
    throw InvalidConfig("interval: delta must lie in (0, 1]");
  IntervalIndex out;
  out.i = i;
  out.lower = ceil_inv_delta_pow(i, delta);
  out.upper_exclusive = ceil_inv_delta_pow(i + 1, delta);
  return out;
}

std::uint64_t interval_of(const BigInt& m, double delta) {
  if (m < 1) throw Error("interval_of: m must be >= 1");
  const double est = std::exp(delta * std::log(std::max(1.0, m.get_d())));
  std::uint64_t i =
      static_cast<std::uint64_t>(std::max(1.0, std::floor(est)));
  while (i > 1 && interval(i, delta).lower > m) --i;
  while (interval(i + 1, delta).lower <= m) ++i;
  return i;
}

double intersection_probability(std::uint64_t i, double delta) {
  const IntervalIndex iv = interval(i, delta);
  if (iv.upper_exclusive - iv.lower > BigInt(1) << 34)
    throw TooLarge("intersection_probability: interval too large to sweep");
  const std::uint64_t lo = iv.lower.get_ui();
  const std::uint64_t hi = iv.upper_exclusive.get_ui();
  double log_miss = 0.0;
  for (std::uint64_t m = lo; m < hi; ++m) {
    const double p = std::pow(static_cast<double>(m), delta - 1.0);
    if (p >= 1.0) return 1.0;
    log_miss += std::log1p(-p);
  }
  return -std::expm1(log_miss);
}

std::uint64_t find_i0(double delta, std::uint64_t i_cap) {
  std::uint64_t frontier = i_cap + 1;
  for (std::uint64_t i = i_cap; i >= 1; --i) {
    if (intersection_probability(i, delta) >= 1.0 / 3.0)
      frontier = i;
    else
      break;
  }
  if (frontier > i_cap)
    throw NotFound("find_i0: tail never stabilizes above 1/3");
  return frontier;
}

double monte_carlo_hit_frequency(std::uint64_t i, double delta,
                                 std::uint64_t trials, std::uint64_t seed) {
  const IntervalIndex iv = interval(i, delta);
  if (iv.upper_exclusive - iv.lower > BigInt(1) << 28)
    throw TooLarge("monte_carlo_hit_frequency: interval too large");
  const std::uint64_t lo = iv.lower.get_ui();
  const std::uint64_t hi = iv.upper_exclusive.get_ui();
  std::vector<double> probs;
  probs.reserve(hi - lo);
  for (std::uint64_t m = lo; m < hi; ++m)
    probs.push_back(std::pow(static_cast<double>(m), delta - 1.0));

  // per-trial derived seeds keep the result independent of thread count
  auto trial_hits = [&probs, seed](std::uint64_t t0, std::uint64_t t1) {
    std::uint64_t hits = 0;
    for (std::uint64_t t = t0; t < t1; ++t) {
      std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (t + 1)));
      for (double p : probs) {
        if (canonical(rng) < p) {
          ++hits;
          break;
        }
      }
    }
    return hits;
  };

  unsigned n_threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("STRONGSIDON_THREADS")) {
    const unsigned limit = static_cast<unsigned>(std::atoi(cap));
    if (limit >= 1) n_threads = std::min(n_threads, limit);
  }
  n_threads = static_cast<unsigned>(
      std::min<std::uint64_t>(n_threads, std::max<std::uint64_t>(trials, 1)));

  std::atomic<std::uint64_t> hits{0};
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (trials + n_threads - 1) / n_threads;
  for (unsigned w = 0; w < n_threads; ++w) {
    const std::uint64_t t0 = w * chunk;
    const std::uint64_t t1 = std::min(trials, t0 + chunk);
    if (t0 >= t1) break;
    pool.emplace_back(
        [&hits, &trial_hits, t0, t1] { hits += trial_hits(t0, t1); });
  }
  for (auto& th : pool) th.join();
  return static_cast<double>(hits.load()) / static_cast<double>(trials);
}

std::vector<std::uint64_t> transfer(const ConstructedSet& strong,
                                    const RandomSample& sample) {
  const double delta = sample.delta;
  if (std::abs(strong.params.alpha - (1.0 - delta)) > 1e-9)
    throw ParamMismatch("transfer: strong set alpha must equal 1 - delta");
  const double gamma_needed =
      static_cast<double>(strong.params.h) * std::exp2(1.0 / delta);
  if (strong.params.gamma < gamma_needed * (1.0 - 1e-12))
    throw ParamMismatch("transfer: gamma below h * 2^(1/delta)");

  const auto values = strong.sorted_values();
  if (!check_strong_bh(values, strong.params).empty())
    throw ParamMismatch(
        "transfer: set fails the strong verifier at the materialized scale");

  // thin to at most one element per interval, keeping the smaller
  std::vector<std::pair<std::uint64_t, BigInt>> survivors;
  for (const BigInt& v : values) {
    const std::uint64_t i = interval_of(v, delta);
    if (survivors.empty() || survivors.back().first != i)
      survivors.emplace_back(i, v);  // values ascending: first one is kept
  }
  if (survivors.empty()) return {};

  const std::uint64_t i_cap = survivors.back().first;
  const std::uint64_t i0 = find_i0(delta, i_cap);

  std::vector<std::uint64_t> out;
  for (const auto& [i, v] : survivors) {
    if (i < i0) continue;
    const IntervalIndex iv = interval(i, delta);
    if (iv.lower > BigInt(sample.n_max)) continue;
    const std::uint64_t lo = iv.lower.get_ui();
    auto it = std::lower_bound(sample.members.begin(), sample.members.end(),
                               lo);
    if (it != sample.members.end() && BigInt(*it) < iv.upper_exclusive)
      out.push_back(*it);  // smallest sample member of the interval
  }
  return out;
}

double random_exponent(double delta, int h) {
  const double b = h - 1 + (1.0 - delta) / 2.0;
  return std::sqrt(b * b + delta) - b;
}

}  // namespace strongsidon
