#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace omdual {

// Subsets of a ground set (at most 64 elements) are stored as bit masks.
using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has_bit(Mask m, int i) { return (m >> i) & Mask{1}; }
constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline std::vector<int> bit_indices(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for (Mask t = m; t; t &= t - 1) out.push_back(std::countr_zero(t));
  return out;
}

// Lexicographic order on subsets viewed as ascending index sequences,
// e.g. {1} < {1,2} < {1,3} < {2}.
inline bool lex_less(Mask a, Mask b) {
  while (a && b) {
    const int i = std::countr_zero(a);
    const int j = std::countr_zero(b);
    if (i != j) return i < j;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// Visits every k-subset of {0,...,n-1} exactly once (Gosper's hack).
template <typename F>
void for_each_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  const Mask limit = Mask{1} << n;
  Mask m = full_mask(k);
  while (m < limit) {
    f(m);
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    if (r >= limit || r == 0) break;
    m = (((m ^ r) >> 2) / c) | r;
  }
}

// Visits every submask of s, including s itself and 0.
template <typename F>
void for_each_submask(Mask s, F&& f) {
  Mask sub = s;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & s;
  }
}

// Re-indexes m against the positions listed in keep: bit i of the result is
// set iff the i-th lowest bit of keep is set in m.
inline Mask compress_mask(Mask m, Mask keep) {
  Mask out = 0;
  int pos = 0;
  for (Mask t = keep; t; t &= t - 1, ++pos) {
    if (m & (t & (~t + 1))) out |= bit(pos);
  }
  return out;
}

// Position of element i within the set keep (i must be in keep).
inline int compressed_index(int i, Mask keep) {
  return popcount(keep & (bit(i) - 1));
}

}  // namespace omdual
