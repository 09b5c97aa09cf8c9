#include "strongsidon/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sum_table.hpp"

namespace strongsidon {

namespace {

// alpha as p/q with q <= 4, when the double is (numerically) such a
// fraction; borderline threshold comparisons are then exact
bool small_rational(double alpha, int& num, int& den) {
  for (int q = 1; q <= 4; ++q) {
    const double scaled = alpha * q;
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) < 1e-12) {
      num = static_cast<int>(rounded);
      den = q;
      return true;
    }
  }
  return false;
}

BigRat rat_pow(const BigRat& base, int exp) {
  BigRat r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

double log_big(const BigInt& n) {
  signed long exp = 0;
  const double d = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

bool violates_threshold(const BigInt& gap, const BigInt& base, double alpha,
                        double gamma) {
  int p = 0, q = 1;
  if (small_rational(alpha, p, q)) {
    // gap < gamma * base^(p/q)  <=>  gap^q < gamma^q * base^p
    const BigRat lhs(pow_big(gap, q));
    const BigRat rhs = rat_pow(BigRat(gamma), q) * BigRat(pow_big(base, p));
    return lhs < rhs;
  }
  return gap.get_d() < gamma * std::exp(alpha * log_big(base));
}

double threshold_value(const BigInt& base, double alpha, double gamma) {
  if (base == 0) return alpha == 0.0 ? gamma : 0.0;
  return gamma * std::exp(alpha * log_big(base));
}

namespace {

void require_sorted_positive(const std::vector<BigInt>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] <= 0)
      throw Error("check: elements must be positive integers");
    if (i > 0 && elements[i] <= elements[i - 1])
      throw Error("check: elements must be strictly increasing");
  }
}

void guard_memory(std::size_t n, int h, std::size_t mem_budget) {
  const std::uint64_t count = detail::multiset_count(n, h);
  // rough per-entry footprint: mpz limbs + index vector + overhead
  const std::uint64_t per_entry = 64 + 4ull * h;
  if (count > mem_budget / per_entry)
    throw TooLarge("check: h-fold sum table exceeds memory budget");
}

ViolationReport make_report(const std::vector<BigInt>& values,
                            const detail::SumEntry& a,
                            const detail::SumEntry& b, double threshold) {
  const bool a_larger = a.idx.back() > b.idx.back();
  std::vector<std::uint32_t> left = (a_larger ? a : b).idx;
  std::vector<std::uint32_t> right = (a_larger ? b : a).idx;
  detail::cancel_common(left, right);

  ViolationReport report;
  for (auto it = left.rbegin(); it != left.rend(); ++it)
    report.left.push_back(values[*it]);
  for (auto it = right.rbegin(); it != right.rend(); ++it)
    report.right.push_back(values[*it]);
  report.gap = abs(b.sum - a.sum);
  report.threshold = threshold;
  report.t = static_cast<int>(left.size());
  return report;
}

}  // namespace

std::vector<ViolationReport> check_strong_bh(
    const std::vector<BigInt>& elements, const StrongParams& params,
    std::size_t mem_budget) {
  params.validate();
  require_sorted_positive(elements);
  std::vector<ViolationReport> reports;
  if (elements.size() < 2) return reports;
  guard_memory(elements.size(), params.h, mem_budget);

  const BigInt& global_max = elements.back();
  const BigInt window(
      std::ceil(threshold_value(global_max, params.alpha, params.gamma) *
                1.000001) +
      2);

  const auto sums = detail::multiset_sums(elements, params.h);
  std::size_t lo = 0;
  for (std::size_t j = 1; j < sums.size(); ++j) {
    while (sums[j].sum - sums[lo].sum > window) ++lo;
    for (std::size_t i = lo; i < j; ++i) {
      const auto& a = sums[i];
      const auto& b = sums[j];
      if (a.idx.back() == b.idx.back()) continue;  // equal maxima
      const BigInt& max_elem =
          elements[std::max(a.idx.back(), b.idx.back())];
      const BigInt gap = abs(b.sum - a.sum);
      if (!violates_threshold(gap, max_elem, params.alpha, params.gamma))
        continue;
      reports.push_back(make_report(
          elements, a, b,
          threshold_value(max_elem, params.alpha, params.gamma)));
    }
  }
  return reports;
}

std::vector<ViolationReport> check_n_finite(
    const std::vector<BigInt>& elements, const BigInt& n, double alpha,
    int h, std::size_t mem_budget) {
  require_sorted_positive(elements);
  for (const BigInt& e : elements)
    if (e > n) throw ElementOutOfRange("check_n_finite: element > n");
  std::vector<ViolationReport> reports;
  if (elements.size() < 2) return reports;
  guard_memory(elements.size(), h, mem_budget);

  const double thr = std::pow(n.get_d(), alpha);
  const BigInt window(std::ceil(thr * 1.000001) + 2);

  const auto sums = detail::multiset_sums(elements, h);
  std::size_t lo = 0;
  for (std::size_t j = 1; j < sums.size(); ++j) {
    while (sums[j].sum - sums[lo].sum > window) ++lo;
    for (std::size_t i = lo; i < j; ++i) {
      const auto& a = sums[i];
      const auto& b = sums[j];
      if (a.idx == b.idx) continue;  // same multiset
      const BigInt gap = abs(b.sum - a.sum);
      if (!violates_threshold(gap, n, alpha, 1.0)) continue;
      ViolationReport report;
      // n-finite reports keep both full sides (no cancellation; the
      // condition is plain multiset inequality)
      for (auto it = a.idx.rbegin(); it != a.idx.rend(); ++it)
        report.right.push_back(elements[*it]);
      for (auto it = b.idx.rbegin(); it != b.idx.rend(); ++it)
        report.left.push_back(elements[*it]);
      if (report.left < report.right) std::swap(report.left, report.right);
      report.gap = gap;
      report.threshold = thr;
      report.t = h;
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

ViolationDiagnostics classify_violation(const ViolationReport& report,
                                        const ConstructedSet& set) {
  if (set.provenance != Provenance::dlog)
    throw NotConstructedElements(
        "classify_violation: set has no digit data");
  const int fold = static_cast<int>(report.left.size());
  if (fold == 0 || report.right.size() != report.left.size())
    throw Error("classify_violation: malformed report");

  std::vector<const DigitElement*> left, right;
  std::vector<std::uint64_t> left_primes, right_primes;
  for (const BigInt& v : report.left) {
    left.push_back(&set.element_of(v));
    left_primes.push_back(set.key_of(v));
  }
  for (const BigInt& v : report.right) {
    right.push_back(&set.element_of(v));
    right_primes.push_back(set.key_of(v));
  }
  for (const auto* e : left)
    if (!e->has_digits())
      throw NotConstructedElements("classify_violation: missing digits");
  for (const auto* e : right)
    if (!e->has_digits())
      throw NotConstructedElements("classify_violation: missing digits");

  const int k1 = static_cast<int>(left[0]->length());
  auto digit_at = [](const DigitElement* e, int i) -> std::uint64_t {
    return i <= static_cast<int>(e->length()) ? e->digits[i - 1] : 0;
  };

  ViolationDiagnostics diag;
  for (int i = 1; i <= k1; ++i) {
    std::uint64_t ls = 0, rs = 0;
    for (const auto* e : left) ls += digit_at(e, i);
    for (const auto* e : right) rs += digit_at(e, i);
    if (ls != rs) diag.ell = i;
  }

  std::vector<int> klen, klen_p;
  for (const auto* e : left) klen.push_back(static_cast<int>(e->length()));
  for (const auto* e : right)
    klen_p.push_back(static_cast<int>(e->length()));

  for (int i = 1; i <= fold; ++i)
    if (diag.ell < std::max(klen[i - 1], klen_p[i - 1])) diag.t = i;

  const double alpha = set.params.alpha;
  const double gamma = set.params.gamma;
  const double h = set.params.h;
  const double bound = std::sqrt(alpha * k1 * k1 +
                                 (std::log2(h) + 1.0) * 2.0 * alpha * k1 +
                                 std::log2(gamma)) +
                       1.0;
  diag.check_ii = diag.ell <= bound + 1e-9;

  if (diag.t >= 1) {
    const int kt = klen[diag.t - 1];
    double rhs = (1.0 - set.c) * kt * kt;
    for (int i = 1; i < diag.t; ++i) rhs -= set.c * klen[i - 1] * klen[i - 1];
    diag.check_iii =
        static_cast<double>(diag.ell) * diag.ell >= rhs - 1e-9;

    BigInt q_product = 1;
    for (int i = diag.ell + 1; i <= k1; ++i)
      q_product *= set.basis.base_primes.at(i - 1);
    BigInt divisor_target = 1;
    BigInt pl = 1, pr = 1;
    for (int i = 1; i <= diag.t; ++i) {
      pl *= left_primes[i - 1];
      pr *= right_primes[i - 1];
      divisor_target *= (pl - pr);
    }
    diag.check_iv = divides(q_product, divisor_target);
  }
  return diag;
}

double finite_upper_bound(const BigInt& n, double alpha, int h) {
  const double hd = h;
  return 2.0 * std::pow(hd, 1.0 + 1.0 / hd) *
         std::exp((1.0 - alpha) / hd * log_big(n));
}

double infinite_upper_constant(double alpha, int h) {
  const double hd = h;
  const double denom = std::exp2((1.0 - alpha) / hd) - 1.0;
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return 4.0 * std::pow(hd, 1.0 + 1.0 / hd) / denom;
}

}  // namespace strongsidon
