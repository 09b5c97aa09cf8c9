#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "strongsidon/bigint.hpp"

namespace strongsidon::detail {

// One t-fold multiset of elements, by non-decreasing indices into a sorted
// value vector; the side's maximum is values[idx.back()].
struct SumEntry {
  BigInt sum;
  std::vector<std::uint32_t> idx;
};

inline std::uint64_t multiset_count(std::uint64_t n, int t) {
  // C(n + t - 1, t), saturating
  unsigned __int128 r = 1;
  for (int i = 0; i < t; ++i) {
    r = r * (n + t - 1 - i) / (i + 1);
    if (r > (unsigned __int128)1 << 62) return 1ull << 62;
  }
  return static_cast<std::uint64_t>(r);
}

inline void enumerate_rec(const std::vector<BigInt>& values, int t,
                          std::uint32_t start, BigInt& acc,
                          std::vector<std::uint32_t>& idx,
                          std::vector<SumEntry>& out) {
  if (t == 0) {
    out.push_back({acc, idx});
    return;
  }
  for (std::uint32_t i = start; i < values.size(); ++i) {
    acc += values[i];
    idx.push_back(i);
    enumerate_rec(values, t - 1, i, acc, idx, out);
    idx.pop_back();
    acc -= values[i];
  }
}

// All t-fold multiset sums over the sorted values, ordered by sum (ties by
// index vector, so the order is deterministic).
inline std::vector<SumEntry> multiset_sums(const std::vector<BigInt>& values,
                                           int t) {
  std::vector<SumEntry> out;
  out.reserve(multiset_count(values.size(), t));
  BigInt acc = 0;
  std::vector<std::uint32_t> idx;
  enumerate_rec(values, t, 0, acc, idx, out);
  std::sort(out.begin(), out.end(), [](const SumEntry& a, const SumEntry& b) {
    if (a.sum != b.sum) return a.sum < b.sum;
    return a.idx < b.idx;
  });
  return out;
}

// Multiset intersection emptiness on sorted index vectors.
inline bool disjoint(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return true;
}

// Removes common elements (as multisets) from both sides.
inline void cancel_common(std::vector<std::uint32_t>& a,
                          std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> ra, rb;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ra.push_back(a[i++]);
    } else {
      rb.push_back(b[j++]);
    }
  }
  ra.insert(ra.end(), a.begin() + i, a.end());
  rb.insert(rb.end(), b.begin() + j, b.end());
  a = std::move(ra);
  b = std::move(rb);
}

}  // namespace strongsidon::detail
