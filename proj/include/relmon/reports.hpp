// Report assembly shared by the CLI and the test suites.  Every command
// output is produced here as a plain string so byte-level determinism
// can be asserted directly.  Large integers are serialized as decimal
// strings in JSON; CSV and text modes print the same decimal digits.

#ifndef RELMON_REPORTS_HPP_
#define RELMON_REPORTS_HPP_

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "relmon/boolean_rank.hpp"
#include "relmon/dims.hpp"
#include "relmon/functor_eval.hpp"
#include "relmon/lattice.hpp"
#include "relmon/oracle.hpp"
#include "relmon/poset_enum.hpp"
#include "relmon/relation.hpp"

namespace relmon {

using ordered_json = nlohmann::ordered_json;

enum class Format { json, csv, text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format: " + s);
}

namespace detail {

inline std::vector<std::string> matrix_rows(const Relation& r) {
  std::vector<std::string> rows;
  for (int z = 0; z < r.n; ++z) {
    std::string line;
    for (int x = 0; x < r.n; ++x) line.push_back(r.bit(z, x) ? '1' : '0');
    rows.push_back(std::move(line));
  }
  return rows;
}

inline std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

}  // namespace detail

// ------------------------------------------------------------------ posets

inline std::string posets_report(int e, int threads, Format format) {
  const auto& classes = poset_catalog(e, threads);
  if (format == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : classes) {
      ordered_json row;
      row["class_id"] = c.class_id;
      row["e"] = c.e;
      row["matrix"] = detail::matrix_rows(c.canon);
      row["aut_order"] = c.aut_order;
      row["labeled_count"] = c.labeled_count();
      arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = "class_id,e,aut_order,labeled_count,matrix\n";
    for (const auto& c : classes) {
      out += std::to_string(c.class_id) + "," + std::to_string(c.e) + "," +
             std::to_string(c.aut_order) + "," + std::to_string(c.labeled_count()) + "," +
             detail::join(detail::matrix_rows(c.canon), '|') + "\n";
    }
    return out;
  }
  std::string out = "posets of size " + std::to_string(e) + ": " +
                    std::to_string(classes.size()) + " classes\n";
  for (const auto& c : classes) {
    out += "class " + std::to_string(c.class_id) + "  |Aut|=" + std::to_string(c.aut_order) +
           "  labeled=" + std::to_string(c.labeled_count()) + "\n";
    for (const auto& line : detail::matrix_rows(c.canon)) out += "  " + line + "\n";
  }
  return out;
}

// ------------------------------------------------------------------ g-table

struct GTableRow {
  int class_id;
  int e;
  int lattice_size;
  std::vector<int> irreducibles;
  int g;
  int fixed_count;
  bool flagged;
};

inline std::vector<GTableRow> gtable_rows(int max_e, int threads) {
  auto refs = g_reference_table(threads);
  std::vector<GTableRow> rows;
  for (int e = 0; e <= max_e; ++e) {
    const auto& classes = poset_catalog(e, threads);
    auto computed = parallel_map<GTableRow>(classes.size(), threads, [&](size_t i) {
      const auto& cls = classes[i];
      auto lattice = downset_lattice(cls);
      GInfo info = compute_G(cls, lattice);
      GTableRow row;
      row.class_id = cls.class_id;
      row.e = e;
      row.lattice_size = lattice.size();
      row.irreducibles = lattice.irr;
      row.g = info.g;
      row.fixed_count = static_cast<int>(info.fixed.size());
      row.flagged = info.anomalous;
      return row;
    });
    for (auto& row : computed) {
      for (const auto& ref : refs)
        if (ref.e == row.e && ref.class_id == row.class_id && ref.flagged) row.flagged = true;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::string gtable_report(int max_e, int threads, Format format) {
  auto rows = gtable_rows(max_e, threads);
  if (format == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row;
      row["class_id"] = r.class_id;
      row["e"] = r.e;
      row["lattice_size"] = r.lattice_size;
      row["irreducibles"] = r.irreducibles;
      row["g"] = r.g;
      row["fixed_count"] = r.fixed_count;
      row["flagged"] = r.flagged;
      arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = "e,class_id,lattice_size,irreducibles,g,fixed_count,flagged\n";
    for (const auto& r : rows) {
      std::vector<std::string> irr;
      for (int i : r.irreducibles) irr.push_back(std::to_string(i));
      out += std::to_string(r.e) + "," + std::to_string(r.class_id) + "," +
             std::to_string(r.lattice_size) + "," + detail::join(irr, '|') + "," +
             std::to_string(r.g) + "," + std::to_string(r.fixed_count) + "," +
             (r.flagged ? "true" : "false") + "\n";
    }
    return out;
  }
  std::string out;
  for (const auto& r : rows) {
    out += "e=" + std::to_string(r.e) + " class=" + std::to_string(r.class_id) +
           " |T|=" + std::to_string(r.lattice_size) + " g=" + std::to_string(r.g) +
           " fixed=" + std::to_string(r.fixed_count);
    if (r.flagged) out += "  [flagged: stored table value exceeds lattice size]";
    out += "\n";
  }
  return out;
}

// -------------------------------------------------------------------- dims

inline std::string dims_report(int n, int threads, Format format) {
  auto detail_result = semisimple_dim_detailed(n, threads);
  BigCount dim_alg = algebra_dim(n);
  BigCount radical = dim_alg - detail_result.value;
  if (format == Format::json) {
    ordered_json doc;
    doc["n"] = n;
    doc["dim_algebra"] = dim_alg.to_string();
    doc["semisimple_dim"] = detail_result.value.to_string();
    doc["radical_dim"] = radical.to_string();
    doc["term_divisibility_ok"] = detail_result.term_divisibility_ok;
    ordered_json arr = ordered_json::array();
    for (const auto& t : detail_result.per_class) {
      ordered_json row;
      row["class_id"] = t.class_id;
      row["e"] = t.e;
      row["g"] = t.g;
      row["aut_order"] = t.aut_order;
      row["sum"] = t.sum.to_string();
      row["term"] = t.term.to_string();
      arr.push_back(std::move(row));
    }
    doc["per_class"] = std::move(arr);
    return doc.dump(2) + "\n";
  }
  if (format == Format::csv) {
    // same column order as the published table
    std::string out = "size,class,aut_order,g,sum,total\n";
    for (const auto& t : detail_result.per_class) {
      out += std::to_string(t.e) + "," + std::to_string(t.class_id) + "," +
             std::to_string(t.aut_order) + "," + std::to_string(t.g) + "," +
             t.sum.to_string() + "," + t.term.to_string() + "\n";
    }
    return out;
  }
  std::string out = "n=" + std::to_string(n) + "\n";
  out += "dim algebra     " + dim_alg.to_string() + "\n";
  out += "semisimple dim  " + detail_result.value.to_string() + "\n";
  out += "radical dim     " + radical.to_string() + "\n";
  out += "size class aut_order g sum total\n";
  for (const auto& t : detail_result.per_class) {
    out += std::to_string(t.e) + " " + std::to_string(t.class_id) + " " +
           std::to_string(t.aut_order) + " " + std::to_string(t.g) + " " + t.sum.to_string() +
           " " + t.term.to_string() + "\n";
  }
  return out;
}

inline std::string radical_report(int n, int threads, Format format) {
  BigCount dim_alg = algebra_dim(n);
  BigCount semi = semisimple_dim(n, threads);
  BigCount radical = dim_alg - semi;
  if (format == Format::json) {
    ordered_json doc;
    doc["n"] = n;
    doc["dim_algebra"] = dim_alg.to_string();
    doc["semisimple_dim"] = semi.to_string();
    doc["radical_dim"] = radical.to_string();
    return doc.dump(2) + "\n";
  }
  if (format == Format::csv) {
    return "n,dim_algebra,semisimple_dim,radical_dim\n" + std::to_string(n) + "," +
           dim_alg.to_string() + "," + semi.to_string() + "," + radical.to_string() + "\n";
  }
  return "n=" + std::to_string(n) + "\ndim algebra     " + dim_alg.to_string() +
         "\nsemisimple dim  " + semi.to_string() + "\nradical dim     " + radical.to_string() +
         "\n";
}

// ------------------------------------------------------------------ table3

inline std::string table3_report(int threads, Format format) {
  Table3 t = table3(threads);
  if (format == Format::json) {
    ordered_json doc;
    ordered_json arr = ordered_json::array();
    for (const auto& r : t.rows) {
      ordered_json row;
      row["size"] = r.e;
      row["class"] = r.label;
      row["aut_order"] = r.aut_order;
      row["g"] = r.g;
      row["g_computed"] = r.g_computed;
      row["flagged"] = r.flagged;
      row["sum"] = r.sum.to_string();
      row["total"] = r.total.to_string();
      arr.push_back(std::move(row));
    }
    doc["rows"] = std::move(arr);
    doc["grand_total"] = t.grand_total.to_string();
    doc["dim_algebra"] = t.dim_algebra.to_string();
    doc["radical"] = t.radical.to_string();
    return doc.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = "size,class,aut_order,g,sum,total\n";
    for (const auto& r : t.rows) {
      out += std::to_string(r.e) + "," + r.label + "," + std::to_string(r.aut_order) + "," +
             std::to_string(r.g) + "," + r.sum.to_string() + "," + r.total.to_string() + "\n";
    }
    return out;
  }
  std::string out = "size class aut_order g sum total\n";
  for (const auto& r : t.rows) {
    out += std::to_string(r.e) + " " + r.label + " " + std::to_string(r.aut_order) + " " +
           std::to_string(r.g) + (r.flagged ? "*" : "") + " " + r.sum.to_string() + " " +
           r.total.to_string() + "\n";
  }
  out += "grand total " + t.grand_total.to_string() + "\n";
  out += "dim algebra " + t.dim_algebra.to_string() + "\n";
  out += "radical     " + t.radical.to_string() + "\n";
  for (const auto& r : t.rows)
    if (r.flagged)
      out += "* stored g=" + std::to_string(r.g) +
             " exceeds the lattice size; computations use g=" + std::to_string(r.g_computed) +
             "\n";
  return out;
}

inline std::string oracle_report(int n, int threads, Format format) {
  GramMatrix g = gram(n, threads);
  int rank = bareiss_rank(g);
  long long radical = g.m - rank;
  if (format == Format::json) {
    ordered_json doc;
    doc["n"] = n;
    doc["m"] = g.m;
    doc["rank"] = rank;
    doc["radical_dim"] = radical;
    return doc.dump(2) + "\n";
  }
  if (format == Format::csv) {
    return "n,m,rank,radical_dim\n" + std::to_string(n) + "," + std::to_string(g.m) + "," +
           std::to_string(rank) + "," + std::to_string(radical) + "\n";
  }
  return "n=" + std::to_string(n) + "\nbasis size  " + std::to_string(g.m) + "\nrank        " +
         std::to_string(rank) + "\nradical dim " + std::to_string(radical) + "\n";
}

// ---------------------------------------------------------------- selftest

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelftestConfig {
  int threads = 1;
  uint64_t budget = 10'000'000;
  bool include_oracle3 = true;  // the n=3 trace-form run takes the longest
  std::optional<std::vector<GReference>> override_reference;  // fault injection hook
};

namespace selftest_detail {

inline Relation random_relation(std::mt19937& rng, int n, int density_percent = 50) {
  Relation r = empty_relation(n);
  std::uniform_int_distribution<int> d(0, 99);
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      if (d(rng) < density_percent) r.set(z, x);
  return r;
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
  Permutation p = identity_perm(n);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> d(0, i);
    std::swap(p.img[i], p.img[d(rng)]);
  }
  return p;
}

}  // namespace selftest_detail

inline std::vector<CheckResult> run_selftest(const SelftestConfig& config) {
  std::vector<CheckResult> results;
  auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
    results.push_back({name, pass, detail});
  };
  auto guard = [&](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& ex) {
      check(name, false, std::string("exception: ") + ex.what());
    }
  };
  const int threads = config.threads;

  guard("relation invariants", [&] {
    std::mt19937 rng(12345);
    bool assoc = true, identity = true, homo = true, order_inv = true, roundtrip = true;
    for (int iter = 0; iter < 1000; ++iter) {
      int n = 1 + static_cast<int>(rng() % 6);
      Relation a = selftest_detail::random_relation(rng, n);
      Relation b = selftest_detail::random_relation(rng, n);
      Relation c = selftest_detail::random_relation(rng, n);
      if (compose(compose(a, b), c) != compose(a, compose(b, c))) assoc = false;
      Relation d = delta(identity_perm(n));
      if (compose(d, a) != a || compose(a, d) != a) identity = false;
      Permutation s = selftest_detail::random_permutation(rng, n);
      if (conjugate(s, compose(a, b)) != compose(conjugate(s, a), conjugate(s, b))) homo = false;
      if (parse_text(to_text(a)) != a) roundtrip = false;
    }
    for (int iter = 0; iter < 200; ++iter) {
      int n = 1 + static_cast<int>(rng() % 5);
      const auto& classes = poset_catalog(n, threads);
      const Relation& r = classes[rng() % classes.size()].canon;
      Permutation s = selftest_detail::random_permutation(rng, n);
      if (is_order(conjugate(s, r)) != is_order(r)) order_inv = false;
    }
    check("relation invariants", assoc && identity && homo && order_inv && roundtrip,
          "composition associativity, identity, conjugation homomorphism, text round-trip");
  });

  guard("boolean rank goldens", [&] {
    bool ok = boolean_rank(empty_relation(3)) == 0 && boolean_rank(full_relation(3)) == 1 &&
              boolean_rank(delta(identity_perm(3))) == 3 && essential_algebra_dim(0) == 1 &&
              essential_algebra_dim(1) == 1 && essential_algebra_dim(2) == 6;
    check("boolean rank goldens", ok);
  });

  guard("poset class counts", [&] {
    static const uint64_t expected[9] = {1, 1, 2, 5, 16, 63, 318, 2045, 16999};
    bool ok = true;
    std::string detail;
    for (int e = 0; e <= 8; ++e) {
      uint64_t got = poset_catalog(e, threads).size();
      if (got != expected[e]) {
        ok = false;
        detail += "e=" + std::to_string(e) + " got " + std::to_string(got) + "; ";
      }
    }
    check("poset class counts", ok, detail);
  });

  guard("poset dual generation order", [&] {
    bool ok = true;
    for (int e = 5; e <= 8; ++e) {
      auto alt = enumerate_posets(e, threads, ExtendMode::by_minimal);
      const auto& main = poset_catalog(e, threads);
      if (alt.size() != main.size()) ok = false;
      for (size_t i = 0; ok && i < alt.size(); ++i)
        if (encode_key(alt[i].canon) != encode_key(main[i].canon)) ok = false;
    }
    check("poset dual generation order", ok, "minimal-extension generation matches");
  });

  guard("labeled order cross-check", [&] {
    static const uint64_t labeled[6] = {1, 1, 3, 19, 219, 4231};
    bool ok = true;
    for (int e = 0; e <= 5; ++e) {
      if (labeled_order_count_exhaustive(e) != labeled[e]) ok = false;
      uint64_t sum = 0;
      for (const auto& c : poset_catalog(e, threads)) sum += c.labeled_count();
      if (sum != labeled[e]) ok = false;
    }
    if (labeled_class_count_exhaustive(5) != 63) ok = false;
    check("labeled order cross-check", ok, "exhaustive filter and orbit-stabilizer sums");
  });

  guard("lattice goldens", [&] {
    bool ok = true;
    // chain of e has e+1 ideals; antichain of e has 2^e
    for (int e = 1; e <= 6; ++e) {
      Relation chain = empty_relation(e);
      for (int z = 0; z < e; ++z)
        for (int x = 0; x <= z; ++x) chain.set(z, x);
      Relation anti = delta(identity_perm(e));
      if (make_downset_lattice(chain).size() != e + 1) ok = false;
      if (make_downset_lattice(anti).size() != (1 << e)) ok = false;
    }
    // computed g for all size <= 3 classes, in the reference row order
    static const int expected_g[9] = {1, 2, 4, 3, 5, 5, 5, 5, 4};
    auto named = table3_posets();
    for (size_t i = 0; i < named.size(); ++i) {
      int cid = detail::class_id_of(named[i].order, threads);
      const auto& cls = poset_catalog(named[i].order.n, threads)[cid];
      GInfo info = compute_G(cls, downset_lattice(cls));
      if (info.g != expected_g[i] || info.anomalous) ok = false;
    }
    // e <= g <= |T| across all sizes
    for (int e = 0; e <= 8; ++e)
      for (const auto& cls : poset_catalog(e, threads)) {
        auto lattice = downset_lattice(cls);
        GInfo info = compute_G(cls, lattice);
        if (info.g < e || info.g > lattice.size()) ok = false;
      }
    check("lattice goldens", ok);
  });

  guard("table3 reproduction", [&] {
    auto refs = config.override_reference ? *config.override_reference
                                          : g_reference_table(threads);
    static const uint64_t expect_aut[9] = {1, 1, 2, 1, 6, 1, 2, 2, 1};
    static const int expect_g[9] = {1, 2, 4, 3, 5, 5, 5, 5, 6};
    static const long long expect_sum[9] = {1, 7, 18, 12, 6, 6, 6, 6, 6};
    static const long long expect_total[9] = {1, 49, 162, 144, 6, 36, 18, 18, 36};
    Table3 t = table3(threads);
    // rebind displayed g to the (possibly injected) reference table
    for (auto& row : t.rows)
      for (const auto& ref : refs)
        if (ref.e == row.e && ref.class_id == row.class_id) {
          row.g = ref.g;
          row.flagged = ref.flagged;
        }
    bool ok = t.rows.size() == 9;
    std::string detail;
    for (size_t i = 0; ok && i < 9; ++i) {
      const auto& row = t.rows[i];
      if (row.aut_order != expect_aut[i] || row.g != expect_g[i] ||
          row.sum != BigCount(expect_sum[i]) || row.total != BigCount(expect_total[i])) {
        ok = false;
        detail = "row " + std::to_string(i) + " (" + row.label + ") mismatch";
      }
    }
    if (ok && !(t.grand_total == BigCount(470) && t.radical == BigCount(42) &&
                t.dim_algebra == BigCount(512)))
      ok = false;
    if (ok && !t.rows[8].flagged) {
      ok = false;
      detail = "3-chain row not flagged";
    }
    check("table3 reproduction", ok, detail);
  });

  guard("dims goldens", [&] {
    bool ok = b_count(1, 2, 2) == BigCount(3) && b_count(2, 4, 2) == BigCount(2) &&
              b_count(2, 3, 2) == BigCount(2) && b_count(3, 5, 3) == BigCount(6) &&
              b_count(2, 4, 1) == BigCount(0);
    ok = ok && dim_simple({1, 0, 1, 2}, 2, 1) == BigCount(3) &&
         dim_simple({0, 0, 1, 5}, 1, 1) == BigCount(1) &&
         dim_simple({2, 0, 1, 2}, 4, 2) == BigCount(1) &&   // equality order
         dim_simple({2, 1, 1, 2}, 3, 1) == BigCount(2);     // total order
    ok = ok && count_simples(0, threads) == 1 && count_simples(1, threads) == 2 &&
         count_simples(2, threads) == 5;
    ok = ok && count_simples_essential(0, threads) == 1 &&
         count_simples_essential(1, threads) == 1 && count_simples_essential(2, threads) == 3;
    ok = ok && semisimple_dim(2, threads) == BigCount(16) &&
         semisimple_dim(3, threads) == BigCount(470);
    check("dims goldens", ok);
  });

  guard("radical dimensions", [&] {
    static const char* expected[9] = {"0", "0", "0", "42", "32616", "29446050",
                                      "67860904320", "562649705679642",
                                      "18446568932288588616"};
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= 8; ++n) {
      BigCount got = radical_dim(n, threads);
      if (got.to_string() != expected[n]) {
        ok = false;
        detail += "n=" + std::to_string(n) + " got " + got.to_string() + "; ";
      }
    }
    check("radical dimensions", ok, detail);
  });

  guard("functor invariants", [&] {
    std::mt19937 rng(98765);
    bool functorial = true, counts = true, vanish = true, orbits = true, divisible = true;
    for (int e = 0; e <= 3; ++e) {
      for (const auto& cls : poset_catalog(e, threads)) {
        auto lattice = downset_lattice(cls);
        GInfo info = compute_G(cls, lattice);
        for (int nX = 0; nX <= 4; ++nX) {
          auto maps = b_enumerate(cls, info, lattice, nX, config.budget);
          BigCount expected_count = b_count(e, info.g, nX);
          if (BigCount(static_cast<long long>(maps.size())) != expected_count) counts = false;
          if (nX < e && !maps.empty()) vanish = false;
          if (nX >= e && maps.empty()) vanish = false;
          // free right action: all orbits have size |Aut|
          if (!maps.empty() && nX >= 1) {
            std::vector<LatticeMap> orbit_of_first;
            for (const auto& s : cls.aut_elements)
              orbit_of_first.push_back(aut_act(maps[0], s, lattice));
            std::sort(orbit_of_first.begin(), orbit_of_first.end(),
                      [](const LatticeMap& a, const LatticeMap& b) { return a.values < b.values; });
            for (size_t i = 1; i < orbit_of_first.size(); ++i)
              if (orbit_of_first[i].values == orbit_of_first[i - 1].values) orbits = false;
          }
        }
      }
    }
    for (int iter = 0; iter < 1000; ++iter) {
      int e = 1 + static_cast<int>(rng() % 3);
      const auto& classes = poset_catalog(e, threads);
      const auto& cls = classes[rng() % classes.size()];
      auto lattice = downset_lattice(cls);
      int nX = 1 + static_cast<int>(rng() % 4);
      LatticeMap phi;
      phi.nX = nX;
      for (int i = 0; i < nX; ++i)
        phi.values.push_back(static_cast<int>(rng() % lattice.size()));
      Relation u = selftest_detail::random_relation(rng, nX);
      Relation v = selftest_detail::random_relation(rng, nX);
      if (act(compose(v, u), phi, lattice) != act(v, act(u, phi, lattice), lattice))
        functorial = false;
    }
    for (int e = 0; e <= 6; ++e)
      for (const auto& cls : poset_catalog(e, threads)) {
        GInfo info = compute_G(cls, downset_lattice(cls));
        for (int nX = e; nX <= 8; ++nX)
          if (!b_count(e, info.g, nX).divisible_by(BigCount::from_u64(cls.aut_order)))
            divisible = false;
      }
    check("functor invariants", functorial && counts && vanish && orbits && divisible,
          "functoriality, |B| agreement, vanishing, free orbits, divisibility");
  });

  guard("canonical form properties", [&] {
    std::mt19937 rng(555);
    bool ok = true;
    for (int iter = 0; iter < 300; ++iter) {
      int e = 1 + static_cast<int>(rng() % 5);
      const auto& classes = poset_catalog(e, threads);
      const Relation& r = classes[rng() % classes.size()].canon;
      Permutation s = selftest_detail::random_permutation(rng, e);
      Relation conj = conjugate(s, r);
      if (canonical_form(conj) != canonical_form(r)) ok = false;
      if (canonical_form(canonical_form(conj)) != canonical_form(conj)) ok = false;
    }
    check("canonical form properties", ok, "conjugation invariance and idempotence");
  });

  guard("oracle agreement", [&] {
    bool ok = true;
    std::string detail;
    int top = config.include_oracle3 ? 3 : 2;
    for (int n = 0; n <= top; ++n) {
      long long got = radical_dim_oracle(n, threads);
      BigCount formula = radical_dim(n, threads);
      if (BigCount(got) != formula) {
        ok = false;
        detail += "n=" + std::to_string(n) + " oracle " + std::to_string(got) + " vs formula " +
                  formula.to_string() + "; ";
      }
    }
    check("oracle agreement", ok, detail);
  });

  guard("output determinism", [&] {
    bool ok = true;
    for (int pass = 0; pass < 2; ++pass) {
      if (posets_report(5, 1, Format::json) != posets_report(5, threads + pass, Format::json))
        ok = false;
      if (radical_report(5, 1, Format::json) != radical_report(5, threads + pass, Format::json))
        ok = false;
      if (gtable_report(4, 1, Format::json) != gtable_report(4, threads + pass, Format::json))
        ok = false;
    }
    check("output determinism", ok, "byte-identical across repeated runs and thread counts");
  });

  return results;
}

inline std::string selftest_report(const std::vector<CheckResult>& results) {
  std::string out;
  int failed = 0;
  for (const auto& r : results) {
    if (r.pass) {
      out += "ok   " + r.name + "\n";
    } else {
      ++failed;
      out += "FAIL " + r.name + (r.detail.empty() ? "" : ": " + r.detail) + "\n";
    }
  }
  out += failed == 0 ? "all checks passed\n"
                     : std::to_string(failed) + " check(s) failed\n";
  return out;
}

}  // namespace relmon

#endif  // RELMON_REPORTS_HPP_
