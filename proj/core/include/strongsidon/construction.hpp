#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "strongsidon/base_arith.hpp"
#include "strongsidon/prime_tools.hpp"
#include "strongsidon/violation.hpp"

namespace strongsidon {

/// The (alpha, gamma)-strong B_h condition parameters.
/// h=2, alpha=0, gamma=1 recovers the classical Sidon condition.
struct StrongParams {
  int h = 2;
  double alpha = 0.0;
  double gamma = 1.0;

  void validate() const;
};

enum class Provenance { dlog, greedy, external };

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

struct ConstructedSet {
  StrongParams params;
  GeneralizedBasis basis;
  double c = 0.0;
  LogBase f_log_base = LogBase::e;
  Provenance provenance = Provenance::external;

  // prime -> element for dlog-constructed sets; for greedy/external sets the key
  // is the element value itself and the digit vector is empty
  std::map<std::uint64_t, DigitElement> elements;
  std::vector<std::uint64_t> pruned;   // primes removed by prune()
  std::vector<std::uint64_t> skipped;  // PrimeCollision primes

  std::vector<BigInt> sorted_values() const;
  std::uint64_t key_of(const BigInt& value) const;  // throws NotFound
  const DigitElement& element_of(const BigInt& value) const;
};

/// The element a_p of length k: digit x_i is the representative of
/// discrete_log(p, g_i, q_i') modulo q_i'-1 inside [(h-1)q_i'+1, h q_i'-1].
/// Throws PrimeCollision if p divides some q_i', i <= k.
DigitElement element_for_prime(std::uint64_t p, int k,
                               const GeneralizedBasis& basis);

/// A_{q_bar,c,h} materialized for parts 3 <= k <= k_max. Primes raising
/// PrimeCollision are recorded in `skipped`.
ConstructedSet build_set(double c, const StrongParams& params,
                         const GeneralizedBasis& basis, int k_max,
                         LogBase f_log_base = LogBase::e);

/// Positive root of c^2 + (2h-2+alpha)c + alpha - 1 = 0, i.e.
/// sqrt((h-1+alpha/2)^2 + 1-alpha) - (h-1+alpha/2): the growth parameter
/// that balances the partition density against the strong condition.
double optimal_c(double alpha, int h);

/// All t-fold violating tuple pairs, 1 <= t <= h: disjoint same-length
/// sides with distinct maxima and gap < gamma * max^alpha. Exhaustive at
/// the materialized scale via a sorted-sum window scan.
std::vector<ViolationReport> find_violations(const ConstructedSet& set);

/// Indexing primes of the left-side maxima of find_violations.
std::set<std::uint64_t> find_bad_primes(const ConstructedSet& set);

/// The input with find_bad_primes removed (recorded in `pruned`).
ConstructedSet prune(const ConstructedSet& set);

/// Greedy scan m = 1..n_max, keeping m whenever the augmented set still
/// satisfies the (alpha, gamma)-strong B_h condition.
ConstructedSet greedy_strong_bh(const StrongParams& params,
                                std::uint64_t n_max);

}  // namespace strongsidon
