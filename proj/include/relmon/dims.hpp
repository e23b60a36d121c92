// Exact dimension formulas: the alternating sum counting B_{E,R,X},
// simple-module dimensions, semisimple-quotient and Jacobson-radical
// dimensions, and the published size <= 3 table.
//
// Everything here is exact integer arithmetic over BigCount; characteristic
// zero and a splitting field are standing assumptions (the radical formula
// needs only |Aut| via the Maschke identity).

#ifndef RELMON_DIMS_HPP_
#define RELMON_DIMS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "relmon/bigint.hpp"
#include "relmon/lattice.hpp"
#include "relmon/parallel.hpp"
#include "relmon/poset_enum.hpp"

namespace relmon {

// Pascal recurrence in exact integers.
inline BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<BigCount> table(static_cast<size_t>(n) + 1);
  table[0] = 1;
  for (int row = 1; row <= n; ++row)
    for (int j = row; j >= 1; --j) table[j] = table[j] + table[j - 1];
  return table[k];
}

// |B_{E,R,X}| = sum_{i=0}^{e} (-1)^i C(e,i) (g-i)^{nX}
inline BigCount b_count(int e, int g, int nX) {
  if (e < 0 || g < e || nX < 0) throw std::invalid_argument("b_count: need 0 <= e <= g, nX >= 0");
  BigCount pos = 0, neg = 0;
  for (int i = 0; i <= e; ++i) {
    BigCount term = binomial(e, i) * BigCount::pow_u64(static_cast<uint64_t>(g - i),
                                                       static_cast<unsigned>(nX));
    if (i % 2 == 0)
      pos += term;
    else
      neg += term;
  }
  BigCount out = pos - neg;
  if (out.is_negative()) throw std::logic_error("b_count: negative value");
  return out;
}

struct SimpleParam {
  int e = 0;
  int class_id = 0;
  uint64_t dimV = 1;  // caller-supplied dimension of a simple Aut(E,R)-module
  int nX = 0;
};

// dim S_{E,R,V}(X) = dimV * b_count / |Aut(E,R)|; zero when |X| < |E|.
inline BigCount dim_simple(const SimpleParam& p, int g, uint64_t aut_order) {
  if (p.dimV == 0 || aut_order == 0) throw std::invalid_argument("dim_simple: bad parameters");
  if (p.nX < p.e) return 0;
  BigCount numer = BigCount::from_u64(p.dimV) * b_count(p.e, g, p.nX);
  return BigCount::div_exact(numer, BigCount::from_u64(aut_order));
}

// Number of simple modules of the relation algebra on n points: one per
// triple (E,R,V) with |E| <= n, counted via conjugacy classes of Aut(E,R).
inline long long count_simples(int n, int threads = 1) {
  if (n < 0 || n > kMaxPosetSize) throw std::invalid_argument("count_simples: n <= 8");
  long long total = 0;
  for (int e = 0; e <= n; ++e)
    for (const auto& cls : poset_catalog(e, threads))
      total += conjugacy_class_count(cls.aut_elements);
  return total;
}

// Simple modules of the essential algebra on e points: pairs (R,V).
inline long long count_simples_essential(int e, int threads = 1) {
  if (e < 0 || e > kMaxPosetSize)
    throw std::invalid_argument("count_simples_essential: e <= 8");
  long long total = 0;
  for (const auto& cls : poset_catalog(e, threads))
    total += conjugacy_class_count(cls.aut_elements);
  return total;
}

struct ClassTerm {
  int e = 0;
  int class_id = 0;
  int g = 0;
  uint64_t aut_order = 1;
  BigCount sum;   // b_count(e, g, n)
  BigCount term;  // sum^2 / aut_order when exact
};

struct SemisimpleResult {
  BigCount value;
  bool term_divisibility_ok = true;
  std::vector<ClassTerm> per_class;
};

// dim of the semisimple quotient: sum over classes of b^2 / |Aut|.
// Divisibility is asserted per term; if it ever failed the accumulation
// would downgrade to an exact fraction and report instead of rounding.
inline SemisimpleResult semisimple_dim_detailed(int n, int threads = 1) {
  if (n < 0 || n > kMaxPosetSize) throw std::invalid_argument("semisimple_dim: n <= 8");
  SemisimpleResult out;
  out.value = 0;
  BigCount frac_num = 0, frac_den = 1;  // only used on the fallback path
  for (int e = 0; e <= n; ++e) {
    const auto& classes = poset_catalog(e, threads);
    auto terms = parallel_map<ClassTerm>(classes.size(), threads, [&](size_t i) {
      const auto& cls = classes[i];
      ClassTerm t;
      t.e = e;
      t.class_id = cls.class_id;
      t.aut_order = cls.aut_order;
      t.g = compute_G(cls, downset_lattice(cls)).g;
      t.sum = b_count(e, t.g, n);
      BigCount square = t.sum * t.sum;
      BigCount aut = BigCount::from_u64(cls.aut_order);
      if (square.divisible_by(aut)) {
        t.term = BigCount::div_exact(square, aut);
      } else {
        t.term = -1;  // reported via term_divisibility_ok
      }
      return t;
    });
    for (auto& t : terms) {
      if (t.term.is_negative()) {
        out.term_divisibility_ok = false;
        frac_num = frac_num * BigCount::from_u64(t.aut_order) + t.sum * t.sum * frac_den;
        frac_den = frac_den * BigCount::from_u64(t.aut_order);
      } else {
        out.value += t.term;
      }
      out.per_class.push_back(std::move(t));
    }
  }
  if (!out.term_divisibility_ok) {
    // exact rational tail; the total must still come out integral
    out.value += BigCount::div_exact(frac_num, frac_den);
  }
  return out;
}

inline BigCount semisimple_dim(int n, int threads = 1) {
  return semisimple_dim_detailed(n, threads).value;
}

inline BigCount algebra_dim(int n) {
  return BigCount::pow2(static_cast<unsigned>(n * n));
}

// dim J(R_X) = 2^{n^2} - semisimple_dim(n)
inline BigCount radical_dim(int n, int threads = 1) {
  BigCount out = algebra_dim(n) - semisimple_dim(n, threads);
  if (out.is_negative()) throw std::logic_error("radical_dim: negative value");
  return out;
}

struct Table3Row {
  std::string label;
  int e = 0;
  int class_id = 0;
  uint64_t aut_order = 1;
  int g = 0;           // displayed value: the reference column
  int g_computed = 0;  // value used by all computations
  bool flagged = false;
  BigCount sum;    // column 5 at nX = 3
  BigCount total;  // sum^2 / aut_order
};

struct Table3 {
  std::vector<Table3Row> rows;
  BigCount grand_total;   // 470
  BigCount dim_algebra;   // 512
  BigCount radical;       // 42
};

// One row per class of size <= 3 in the published row order.
inline Table3 table3(int threads = 1) {
  Table3 out;
  out.grand_total = 0;
  auto named = table3_posets();
  auto refs = g_reference_table(threads);
  for (const auto& np : named) {
    int e = np.order.n;
    int cid = detail::class_id_of(np.order, threads);
    const auto& cls = poset_catalog(e, threads)[cid];
    auto lattice = downset_lattice(cls);
    GInfo ginfo = compute_G(cls, lattice);

    Table3Row row;
    row.label = np.name;
    row.e = e;
    row.class_id = cid;
    row.aut_order = cls.aut_order;
    row.g_computed = ginfo.g;
    row.g = ginfo.g;
    for (const auto& ref : refs) {
      if (ref.e == e && ref.class_id == cid) {
        row.g = ref.g;
        row.flagged = ref.flagged || ginfo.anomalous;
      }
    }
    row.sum = b_count(e, row.g_computed, 3);
    row.total = BigCount::div_exact(row.sum * row.sum, BigCount::from_u64(row.aut_order));
    out.grand_total += row.total;
    out.rows.push_back(std::move(row));
  }
  out.dim_algebra = algebra_dim(3);
  out.radical = out.dim_algebra - out.grand_total;
  return out;
}

}  // namespace relmon

#endif  // RELMON_DIMS_HPP_
