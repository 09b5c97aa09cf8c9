#include "strongsidon/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace strongsidon {

namespace {

double log_big(const BigInt& n) {
  signed long exp = 0;
  const double d = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

double ols_slope(const CountingProfile& profile, const BigInt& lo,
                 const BigInt& hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t j = 0; j < profile.checkpoints.size(); ++j) {
    const BigInt& cp = profile.checkpoints[j];
    if (cp < lo || cp > hi || profile.counts[j] < 1) continue;
    const double x = log_big(cp);
    const double y = std::log(static_cast<double>(profile.counts[j]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw InsufficientData("estimate_exponent: < 2 usable points");
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0)
    throw InsufficientData("estimate_exponent: degenerate abscissa");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace

CountingProfile counting_function(const std::vector<BigInt>& elements,
                                  const std::vector<BigInt>& checkpoints) {
  for (std::size_t j = 1; j < checkpoints.size(); ++j)
    if (checkpoints[j] < checkpoints[j - 1])
      throw Error("counting_function: checkpoints must be sorted");
  std::vector<BigInt> sorted = elements;
  std::sort(sorted.begin(), sorted.end());

  CountingProfile profile;
  profile.checkpoints = checkpoints;
  profile.counts.reserve(checkpoints.size());
  for (const BigInt& n : checkpoints) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), n);
    profile.counts.push_back(
        static_cast<std::uint64_t>(it - sorted.begin()));
  }

  if (!checkpoints.empty()) {
    // default window: drop the first decade, where transients dominate
    const BigInt lo = checkpoints.front() * 10;
    const BigInt hi = checkpoints.back();
    profile.window = {lo, hi};
    try {
      profile.fitted_exponent = ols_slope(profile, lo, hi);
    } catch (const InsufficientData&) {
      profile.window = {checkpoints.front(), hi};
      try {
        profile.fitted_exponent = ols_slope(profile, checkpoints.front(), hi);
      } catch (const InsufficientData&) {
        profile.fitted_exponent = 0.0;
      }
    }
  }
  return profile;
}

double estimate_exponent(const CountingProfile& profile,
                         const std::pair<BigInt, BigInt>& window) {
  return ols_slope(profile, window.first, window.second);
}

std::vector<BigInt> geometric_checkpoints(const BigInt& limit) {
  std::vector<BigInt> out;
  if (limit < 1) return out;
  BigInt even = 1;  // 2^(j/2) for even j
  for (;;) {
    if (even > limit) break;
    if (out.empty() || out.back() != even) out.push_back(even);
    // odd step: floor(even * sqrt(2)) = floor(sqrt(2 * even^2))
    const BigInt odd = iroot(2 * even * even, 2);
    if (odd > limit) break;
    if (out.back() != odd) out.push_back(odd);
    even *= 2;
  }
  return out;
}

}  // namespace strongsidon
