// Independent verification of radical dimensions for n <= 3 via the
// trace bilinear form of the regular representation (characteristic
// zero: the radical of the algebra equals the radical of the form).
//
// The Gram matrix on the relation basis has entry (u,v) equal to the
// number of relations fixed by left multiplication with uv.  Its rank
// over the rationals is computed by fraction-free Bareiss elimination in
// exact integers, after the rank-preserving removal of zero/duplicate
// rows and columns.

#ifndef RELMON_ORACLE_HPP_
#define RELMON_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "relmon/bigint.hpp"
#include "relmon/parallel.hpp"
#include "relmon/relation.hpp"

namespace relmon {

constexpr int kMaxOracleSize = 3;  // n = 4 has basis 65536: out of reach

struct GramMatrix {
  int n = 0;
  int m = 0;  // basis size 2^{n^2}
  std::vector<int32_t> entries;  // row-major, m x m

  int32_t at(int u, int v) const { return entries[static_cast<size_t>(u) * m + v]; }
};

namespace detail {

inline void check_oracle_size(int n) {
  if (n < 0 || n > kMaxOracleSize)
    throw std::invalid_argument("oracle: size restricted to n <= 3");
}

// basis encoding: bit (z*n + x) of the index, least significant first
inline Relation relation_from_index(uint32_t index, int n) {
  Relation r = empty_relation(n);
  for (int z = 0; z < n; ++z)
    r.rows[z] = static_cast<uint16_t>((index >> (z * n)) & ((n == 0) ? 0 : ((1u << n) - 1)));
  return r;
}

inline uint32_t index_of_relation(const Relation& r) {
  uint32_t index = 0;
  for (int z = 0; z < r.n; ++z) index |= static_cast<uint32_t>(r.rows[z]) << (z * r.n);
  return index;
}

// full composition table of the relation monoid, rows in parallel
inline std::vector<uint32_t> composition_table(int n, int threads) {
  int m = 1 << (n * n);
  std::vector<Relation> rels(m);
  for (int i = 0; i < m; ++i) rels[i] = relation_from_index(static_cast<uint32_t>(i), n);
  std::vector<uint32_t> table(static_cast<size_t>(m) * m);
  parallel_ranges(static_cast<size_t>(m), threads, [&](size_t begin, size_t end) {
    for (size_t u = begin; u < end; ++u)
      for (int v = 0; v < m; ++v)
        table[u * m + v] = index_of_relation(compose(rels[u], rels[v]));
  });
  return table;
}

}  // namespace detail

// Number of relations r with m o r = r.
inline int left_mul_trace(const Relation& mul) {
  detail::check_oracle_size(mul.n);
  int m = 1 << (mul.n * mul.n);
  int count = 0;
  for (int i = 0; i < m; ++i) {
    Relation r = detail::relation_from_index(static_cast<uint32_t>(i), mul.n);
    if (compose(mul, r) == r) ++count;
  }
  return count;
}

// entry (u,v) = left_mul_trace(uv) over the fixed basis ordering
inline GramMatrix gram(int n, int threads = 1) {
  detail::check_oracle_size(n);
  GramMatrix g;
  g.n = n;
  g.m = 1 << (n * n);
  auto comp = detail::composition_table(n, threads);
  // trace of left multiplication per basis element
  std::vector<int32_t> trace(g.m, 0);
  parallel_ranges(static_cast<size_t>(g.m), threads, [&](size_t begin, size_t end) {
    for (size_t w = begin; w < end; ++w) {
      int32_t fixed = 0;
      for (int r = 0; r < g.m; ++r)
        if (comp[w * g.m + r] == static_cast<uint32_t>(r)) ++fixed;
      trace[w] = fixed;
    }
  });
  g.entries.resize(static_cast<size_t>(g.m) * g.m);
  parallel_ranges(static_cast<size_t>(g.m), threads, [&](size_t begin, size_t end) {
    for (size_t u = begin; u < end; ++u)
      for (int v = 0; v < g.m; ++v)
        g.entries[u * g.m + v] = trace[comp[u * g.m + v]];
  });
  return g;
}

enum class PivotOrder { first_nonzero, min_magnitude };

// Rank over the rationals by one-step Bareiss elimination.  Zero rows
// and duplicate rows/columns are removed first (rank preserving); the
// pivot order is configurable to allow stability cross-checks.
inline int bareiss_rank(const std::vector<int32_t>& entries, int rows, int cols,
                        PivotOrder order = PivotOrder::min_magnitude) {
  // dedupe rows, then columns
  std::vector<std::vector<int32_t>> work;
  {
    std::vector<std::vector<int32_t>> uniq;
    for (int i = 0; i < rows; ++i) {
      std::vector<int32_t> row(entries.begin() + static_cast<size_t>(i) * cols,
                               entries.begin() + static_cast<size_t>(i + 1) * cols);
      bool zero = std::all_of(row.begin(), row.end(), [](int32_t v) { return v == 0; });
      if (!zero && std::find(uniq.begin(), uniq.end(), row) == uniq.end())
        uniq.push_back(std::move(row));
    }
    // transpose, dedupe again, transpose back
    size_t r = uniq.size();
    std::vector<std::vector<int32_t>> tr;
    for (int j = 0; j < cols; ++j) {
      std::vector<int32_t> col(r);
      for (size_t i = 0; i < r; ++i) col[i] = uniq[i][j];
      bool zero = std::all_of(col.begin(), col.end(), [](int32_t v) { return v == 0; });
      if (!zero && std::find(tr.begin(), tr.end(), col) == tr.end()) tr.push_back(std::move(col));
    }
    work = std::move(tr);  // rank(transpose) == rank
  }

  size_t nr = work.size();
  if (nr == 0) return 0;
  size_t nc = work[0].size();

  std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(nc));
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) a[i][j] = work[i][j];

  BigInt prev = 1;
  size_t k = 0;
  while (k < nr && k < nc) {
    size_t pr = nr, pc = nc;
    if (order == PivotOrder::first_nonzero) {
      for (size_t j = k; j < nc && pr == nr; ++j)
        for (size_t i = k; i < nr; ++i)
          if (!a[i][j].is_zero()) {
            pr = i;
            pc = j;
            break;
          }
    } else {
      size_t best_bits = 0;
      for (size_t i = k; i < nr; ++i)
        for (size_t j = k; j < nc; ++j) {
          if (a[i][j].is_zero()) continue;
          size_t bits = a[i][j].bit_length();
          if (pr == nr || bits < best_bits) {
            pr = i;
            pc = j;
            best_bits = bits;
          }
        }
    }
    if (pr == nr) break;  // trailing block is zero
    std::swap(a[k], a[pr]);
    if (pc != k)
      for (size_t i = 0; i < nr; ++i) std::swap(a[i][k], a[i][pc]);

    const BigInt pivot = a[k][k];
    for (size_t i = k + 1; i < nr; ++i) {
      for (size_t j = k + 1; j < nc; ++j)
        a[i][j] = BigInt::div_exact(pivot * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = 0;
    }
    prev = pivot;
    ++k;
  }
  return static_cast<int>(k);
}

inline int bareiss_rank(const GramMatrix& g, PivotOrder order = PivotOrder::min_magnitude) {
  return bareiss_rank(g.entries, g.m, g.m, order);
}

// 2^{n^2} minus the rank of the trace form.
inline long long radical_dim_oracle(int n, int threads = 1,
                                    PivotOrder order = PivotOrder::min_magnitude) {
  detail::check_oracle_size(n);
  GramMatrix g = gram(n, threads);
  return static_cast<long long>(g.m) - bareiss_rank(g, order);
}

// Binary row-major int64 dump plus a JSON header for external audit.
inline void dump_gram(const GramMatrix& g, const std::string& path) {
  std::ofstream bin(path, std::ios::binary);
  if (!bin) throw std::runtime_error("dump_gram: cannot open " + path);
  for (int32_t v : g.entries) {
    int64_t wide = v;
    unsigned char bytes[8];
    for (int b = 0; b < 8; ++b)
      bytes[b] = static_cast<unsigned char>((static_cast<uint64_t>(wide) >> (8 * b)) & 0xff);
    bin.write(reinterpret_cast<const char*>(bytes), 8);
  }
  std::ofstream header(path + ".json");
  if (!header) throw std::runtime_error("dump_gram: cannot open " + path + ".json");
  header << "{\"n\": " << g.n << ", \"m\": " << g.m
         << ", \"encoding\": \"int64 little-endian, row-major, basis bit (z*n+x)\"}\n";
}

}  // namespace relmon

#endif  // RELMON_ORACLE_HPP_
