#include <benchmark/benchmark.h>

#include "strongsidon/construction.hpp"
#include "strongsidon/prime_tools.hpp"
#include "strongsidon/verification.hpp"

namespace ss = strongsidon;

static void BM_SievePrimes(benchmark::State& state) {
  const std::uint64_t limit = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(ss::sieve_primes(limit));
}
BENCHMARK(BM_SievePrimes)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 24);

static void BM_DiscreteLog(benchmark::State& state) {
  const std::uint64_t q = 2147483659ull;  // prime just above 2^31
  const std::uint64_t g = ss::primitive_root(q);
  std::uint64_t target = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ss::discrete_log(target, g, q));
    target = target % (q - 2) + 2;
  }
}
BENCHMARK(BM_DiscreteLog);

static void BM_CheckStrongBh(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<ss::BigInt> elements;
  for (int i = 1; i <= n; ++i)
    elements.emplace_back(ss::BigInt(i) * i * i);  // cubes: a B_2-ish set
  const ss::StrongParams params{2, 0.0, 1.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(ss::check_strong_bh(elements, params));
}
BENCHMARK(BM_CheckStrongBh)->Arg(32)->Arg(128)->Arg(512);

static void BM_Greedy(benchmark::State& state) {
  const ss::StrongParams params{2, 0.0, 1.0};
  const std::uint64_t n_max = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(ss::greedy_strong_bh(params, n_max));
}
BENCHMARK(BM_Greedy)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
