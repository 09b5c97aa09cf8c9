#pragma once

#include <string>
#include <vector>

#include "strongsidon/analysis.hpp"
#include "strongsidon/construction.hpp"
#include "strongsidon/random_sets.hpp"

namespace strongsidon {

/// Set JSON: {h, alpha, gamma, c, basis:{h, q_primes, prim_roots, strategy,
/// seed}, elements:[...], pruned:[...]}. Constructed sets carry an
/// element_digits array in parallel with elements. Integers above 2^53 are
/// emitted as decimal strings.
std::string set_to_json(const ConstructedSet& set);
ConstructedSet set_from_json(const std::string& text);

/// {delta, n_max, seed, members:[...]}
std::string sample_to_json(const RandomSample& sample);
RandomSample sample_from_json(const std::string& text);

/// One JSON object per line: {t, gap, threshold, left:[...], right:[...]}
std::string violations_to_jsonl(const std::vector<ViolationReport>& reports);

/// Header n,count
std::string counting_to_csv(const CountingProfile& profile);

/// Header k,lower,upper,count
std::string partition_to_csv(const PrimePartition& partition);

/// Header k,part_size,bad_count,fraction; `bad` holds the pruned primes
std::string pruning_to_csv(const PrimePartition& partition,
                           const std::vector<std::uint64_t>& bad);

/// Header i,exact_p,empirical_p,n_trials
struct ReplicationRow {
  std::uint64_t i = 0;
  double exact_p = 0.0;
  double empirical_p = 0.0;
  std::uint64_t n_trials = 0;
};
std::string replications_to_csv(const std::vector<ReplicationRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace strongsidon
