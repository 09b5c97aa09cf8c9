#include "strongsidon/construction.hpp"

#include <algorithm>
#include <cmath>

#include "strongsidon/verification.hpp"
#include "sum_table.hpp"

namespace strongsidon {

void StrongParams::validate() const {
  if (h < 2) throw InvalidConfig("params: h must be >= 2");
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw InvalidConfig("params: alpha must lie in [0, 1)");
  if (!(gamma >= 1.0)) throw InvalidConfig("params: gamma must be >= 1");
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::dlog:
      return "dlog";
    case Provenance::greedy:
      return "greedy";
    case Provenance::external:
      return "external";
  }
  return "external";
}

Provenance provenance_from_name(const std::string& name) {
  if (name == "dlog") return Provenance::dlog;
  if (name == "greedy") return Provenance::greedy;
  if (name == "external") return Provenance::external;
  throw InvalidConfig("unknown provenance: " + name);
}

std::vector<BigInt> ConstructedSet::sorted_values() const {
  std::vector<BigInt> values;
  values.reserve(elements.size());
  for (const auto& [key, elem] : elements) values.push_back(elem.value);
  std::sort(values.begin(), values.end());
  return values;
}

std::uint64_t ConstructedSet::key_of(const BigInt& value) const {
  for (const auto& [key, elem] : elements)
    if (elem.value == value) return key;
  throw NotFound("key_of: value not in set");
}

const DigitElement& ConstructedSet::element_of(const BigInt& value) const {
  for (const auto& [key, elem] : elements)
    if (elem.value == value) return elem;
  throw NotConstructedElements("element_of: value not in set");
}

DigitElement element_for_prime(std::uint64_t p, int k,
                               const GeneralizedBasis& basis) {
  if (k < 1) throw Error("element_for_prime: k must be >= 1");
  if (static_cast<std::size_t>(k) > basis.size())
    throw BasisTooShort("element_for_prime: basis provides fewer than k primes");

  DigitElement elem;
  elem.digits.reserve(k);
  for (int i = 0; i < k; ++i) {
    const std::uint64_t q = basis.base_primes[i];
    if (p % q == 0)
      throw PrimeCollision("element_for_prime: p=" + std::to_string(p) +
                           " divides q_" + std::to_string(i + 1) + "'");
    const std::uint64_t e = discrete_log(p % q, basis.prim_roots[i], q);
    const std::uint64_t band_lo =
        static_cast<std::uint64_t>(basis.h - 1) * q + 1;
    // band [ (h-1)q'+1, hq'-1 ] has exactly q'-1 values, one per residue
    // class modulo q'-1
    const std::uint64_t offset = (e + (q - 1) - band_lo % (q - 1)) % (q - 1);
    elem.digits.push_back(band_lo + offset);
  }
  BigInt value = 0;
  BigInt weight = 1;
  for (int i = 0; i < k; ++i) {
    value += BigInt(elem.digits[i]) * weight;
    weight *= basis.radix(i);
  }
  elem.value = value;
  return elem;
}

ConstructedSet build_set(double c, const StrongParams& params,
                         const GeneralizedBasis& basis, int k_max,
                         LogBase f_log_base) {
  params.validate();
  if (static_cast<std::size_t>(k_max) > basis.size())
    throw BasisTooShort("build_set: k_max exceeds basis length");
  if (basis.h != params.h)
    throw InvalidConfig("build_set: basis h does not match params h");

  ConstructedSet set;
  set.params = params;
  set.basis = basis;
  set.c = c;
  set.f_log_base = f_log_base;
  set.provenance = Provenance::dlog;

  const auto partition = prime_partition(c, k_max, f_log_base);
  for (const auto& [k, part] : partition.parts) {
    for (std::uint64_t p : part.primes) {
      try {
        set.elements.emplace(p, element_for_prime(p, k, basis));
      } catch (const PrimeCollision&) {
        set.skipped.push_back(p);
      }
    }
  }
  return set;
}

double optimal_c(double alpha, int h) {
  const double b = h - 1 + alpha / 2.0;
  return std::sqrt(b * b + 1.0 - alpha) - b;
}

std::vector<ViolationReport> find_violations(const ConstructedSet& set) {
  const auto values = set.sorted_values();
  std::vector<ViolationReport> reports;
  if (values.size() < 2) return reports;

  const double alpha = set.params.alpha;
  const double gamma = set.params.gamma;
  const BigInt& global_max = values.back();
  // any violating gap is below gamma * global_max^alpha
  const BigInt window(
      std::ceil(threshold_value(global_max, alpha, gamma) * 1.000001) + 2);

  for (int t = 1; t <= set.params.h; ++t) {
    const auto sums = detail::multiset_sums(values, t);
    std::size_t lo = 0;
    for (std::size_t j = 1; j < sums.size(); ++j) {
      while (sums[j].sum - sums[lo].sum > window) ++lo;
      for (std::size_t i = lo; i < j; ++i) {
        const auto& a = sums[i];
        const auto& b = sums[j];
        if (a.idx.back() == b.idx.back()) continue;  // equal maxima
        if (!detail::disjoint(a.idx, b.idx)) continue;
        const bool a_larger = a.idx.back() > b.idx.back();
        const auto& left = a_larger ? a : b;
        const auto& right = a_larger ? b : a;
        const BigInt& max_elem = values[left.idx.back()];
        const BigInt gap = abs(b.sum - a.sum);
        if (!violates_threshold(gap, max_elem, alpha, gamma)) continue;

        ViolationReport report;
        for (auto it = left.idx.rbegin(); it != left.idx.rend(); ++it)
          report.left.push_back(values[*it]);
        for (auto it = right.idx.rbegin(); it != right.idx.rend(); ++it)
          report.right.push_back(values[*it]);
        report.gap = gap;
        report.threshold = threshold_value(max_elem, alpha, gamma);
        report.t = t;
        reports.push_back(std::move(report));
      }
    }
  }
  return reports;
}

std::set<std::uint64_t> find_bad_primes(const ConstructedSet& set) {
  std::set<std::uint64_t> bad;
  for (const auto& report : find_violations(set))
    bad.insert(set.key_of(report.left.front()));
  return bad;
}

ConstructedSet prune(const ConstructedSet& set) {
  ConstructedSet out = set;
  for (std::uint64_t p : find_bad_primes(set)) {
    out.elements.erase(p);
    out.pruned.push_back(p);
  }
  std::sort(out.pruned.begin(), out.pruned.end());
  return out;
}

namespace {

// t-fold multiset sums over a set of int64 elements, sorted
std::vector<std::int64_t> int_multiset_sums(
    const std::vector<std::int64_t>& values, int t) {
  // recursion over non-decreasing indices
  std::vector<std::int64_t> sums;
  struct Rec {
    const std::vector<std::int64_t>& v;
    std::vector<std::int64_t>& sums;
    int t;
    void go(std::size_t start, std::int64_t acc, int depth) {
      if (depth == t) {
        sums.push_back(acc);
        return;
      }
      for (std::size_t i = start; i < v.size(); ++i)
        go(i, acc + v[i], depth + 1);
    }
  } rec{values, sums, t};
  rec.go(0, 0, 0);
  std::sort(sums.begin(), sums.end());
  return sums;
}

}  // namespace

ConstructedSet greedy_strong_bh(const StrongParams& params,
                                std::uint64_t n_max) {
  params.validate();
  const int h = params.h;
  if (n_max > (1ull << 60) / static_cast<std::uint64_t>(h))
    throw TooLarge("greedy_strong_bh: n_max too large for int64 sums");

  std::vector<std::int64_t> members;
  // sums[t] = sorted t-fold multiset sums of members, t = 0..h
  std::vector<std::vector<std::int64_t>> sums(h + 1);
  for (int t = 0; t <= h; ++t) sums[t] = int_multiset_sums(members, t);

  for (std::uint64_t m = 1; m <= n_max; ++m) {
    const std::int64_t mi = static_cast<std::int64_t>(m);
    const double thr = params.gamma * std::pow(static_cast<double>(m),
                                               params.alpha);
    const std::int64_t w = static_cast<std::int64_t>(thr * 1.000001) + 2;
    const BigInt m_big(m);
    bool ok = true;
    // a new violating pair must have m on exactly one side (distinct
    // maxima); j = multiplicity of m on that side
    for (int j = 1; j <= h && ok; ++j) {
      const std::int64_t base = static_cast<std::int64_t>(j) * mi;
      for (const std::int64_t s1 : sums[h - j]) {
        const std::int64_t target = base + s1;
        auto it = std::lower_bound(sums[h].begin(), sums[h].end(),
                                   target - w);
        for (; it != sums[h].end() && *it <= target + w; ++it) {
          const BigInt gap(
              static_cast<long>(std::llabs(target - *it)));
          if (violates_threshold(gap, m_big, params.alpha, params.gamma)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
    }
    if (ok) {
      members.push_back(mi);
      for (int t = 1; t <= h; ++t) sums[t] = int_multiset_sums(members, t);
    }
  }

  ConstructedSet set;
  set.params = params;
  set.provenance = Provenance::greedy;
  for (std::int64_t v : members) {
    DigitElement elem;
    elem.value = BigInt(static_cast<std::uint64_t>(v));
    set.elements.emplace(static_cast<std::uint64_t>(v), std::move(elem));
  }
  return set;
}

}  // namespace strongsidon
