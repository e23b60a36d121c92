// Exact boolean rank of small relations by branch and bound over
// rectangle covers, and the essentiality predicate built on it.
//
// The boolean rank of R is the least m such that R factors through an
// m-element set, equivalently the least number of combinatorial
// rectangles A x B inside R whose union is R.  Exact computation is
// NP-hard in general; this module is restricted to n <= 5 where the
// reference examples live.

#ifndef RELMON_BOOLEAN_RANK_HPP_
#define RELMON_BOOLEAN_RANK_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "relmon/relation.hpp"

namespace relmon {

constexpr int kMaxRankSize = 5;

namespace detail {

// Cell mask: bit z*n+x for the pair (z,x).
inline uint32_t cell_mask(const Relation& r) {
  uint32_t cells = 0;
  for (int z = 0; z < r.n; ++z)
    for (int x = 0; x < r.n; ++x)
      if (r.bit(z, x)) cells |= 1u << (z * r.n + x);
  return cells;
}

// All maximal rectangles A x B contained in R, as cell masks.  For each
// column set B, the largest compatible row set is {z : rows[z] >= B};
// taking all B and pruning dominated masks leaves the maximal ones.
inline std::vector<uint32_t> maximal_rectangles(const Relation& r) {
  std::vector<uint32_t> rects;
  for (uint32_t b = 1; b < (1u << r.n); ++b) {
    uint16_t cols = static_cast<uint16_t>(b);
    uint32_t cells = 0;
    for (int z = 0; z < r.n; ++z) {
      if ((r.rows[z] & cols) == cols) {
        for (int x = 0; x < r.n; ++x)
          if ((cols >> x) & 1) cells |= 1u << (z * r.n + x);
      }
    }
    if (cells != 0) rects.push_back(cells);
  }
  std::sort(rects.begin(), rects.end());
  rects.erase(std::unique(rects.begin(), rects.end()), rects.end());
  std::vector<uint32_t> maximal;
  for (uint32_t c : rects) {
    bool dominated = false;
    for (uint32_t d : rects)
      if (d != c && (c & ~d) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(c);
  }
  return maximal;
}

inline bool cover_exists(uint32_t uncovered, const std::vector<uint32_t>& rects,
                         int budget) {
  if (uncovered == 0) return true;
  if (budget == 0) return false;
  int cell = std::countr_zero(uncovered);
  for (uint32_t rect : rects) {
    if ((rect >> cell) & 1) {
      if (cover_exists(uncovered & ~rect, rects, budget - 1)) return true;
    }
  }
  return false;
}

}  // namespace detail

inline int boolean_rank(const Relation& r) {
  if (r.n > kMaxRankSize)
    throw std::invalid_argument("boolean_rank: size restricted to n <= 5");
  uint32_t cells = detail::cell_mask(r);
  if (cells == 0) return 0;
  std::vector<uint32_t> rects = detail::maximal_rectangles(r);
  for (int m = 1; m < r.n; ++m)
    if (detail::cover_exists(cells, rects, m)) return m;
  return r.n;  // the n single rows always cover
}

inline bool is_essential(const Relation& r) {
  if (r.n > kMaxRankSize)
    throw std::invalid_argument("is_essential: size restricted to n <= 5");
  return boolean_rank(r) == r.n;
}

// Dimension of the essential algebra E_n = number of essential relations
// on an n-set (the inessential relations span the ideal I_n).
inline long long essential_algebra_dim(int n) {
  if (n < 0 || n > 4)
    throw std::invalid_argument("essential_algebra_dim: size restricted to n <= 4");
  if (n == 0) return 1;  // the empty relation factors through nothing smaller
  long long count = 0;
  uint64_t total = uint64_t{1} << (n * n);
  for (uint64_t code = 0; code < total; ++code) {
    Relation r = empty_relation(n);
    for (int z = 0; z < n; ++z)
      r.rows[z] = static_cast<uint16_t>((code >> (z * n)) & ((1u << n) - 1));
    // cheap filter: rank <= number of distinct nonzero rows
    uint16_t seen[16];
    int distinct = 0;
    bool small = false;
    for (int z = 0; z < n && !small; ++z) {
      if (r.rows[z] == 0) {
        small = true;
        break;
      }
      bool dup = false;
      for (int i = 0; i < distinct; ++i)
        if (seen[i] == r.rows[z]) dup = true;
      if (!dup) seen[distinct++] = r.rows[z];
    }
    if (small || distinct < n) continue;
    if (boolean_rank(r) == n) ++count;
  }
  return count;
}

}  // namespace relmon

#endif  // RELMON_BOOLEAN_RANK_HPP_
