// Isomorph-free generation of partial orders on up to 8 points.
//
// Classes are represented by the lexicographically least bit-matrix
// encoding over all conjugates (encode_key order).  Generation augments
// each class of size k by one new maximal element over every downset,
// modulo the parent's automorphisms, and deduplicates children by
// canonical form; extending by a new minimal element instead gives an
// independent generation order used for cross-checks.

#ifndef RELMON_POSET_ENUM_HPP_
#define RELMON_POSET_ENUM_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "relmon/parallel.hpp"
#include "relmon/relation.hpp"

namespace relmon {

constexpr int kMaxPosetSize = 8;

struct PosetClass {
  int e = 0;
  Relation canon;
  int class_id = 0;                       // index within its size
  uint64_t aut_order = 1;
  std::vector<Permutation> aut_elements;  // the full stabilizer

  uint64_t labeled_count() const {
    uint64_t f = 1;
    for (int i = 2; i <= e; ++i) f *= static_cast<uint64_t>(i);
    return f / aut_order;
  }
};

enum class ExtendMode { by_maximal, by_minimal };

namespace detail {

// Conjugation-invariant vertex keys, refined a few rounds; used to seed
// the canonical search and to restrict automorphism candidates.
inline std::vector<uint64_t> vertex_invariants(const Relation& r) {
  int n = r.n;
  std::vector<uint16_t> col(n, 0);
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      if (r.bit(z, x)) col[x] = static_cast<uint16_t>(col[x] | (1u << z));
  std::vector<uint64_t> inv(n);
  for (int x = 0; x < n; ++x) {
    inv[x] = (static_cast<uint64_t>(std::popcount(r.rows[x])) << 8) |
             static_cast<uint64_t>(std::popcount(col[x]));
  }
  auto mix = [](uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  };
  for (int round = 0; round < 3; ++round) {
    std::vector<uint64_t> next(n);
    for (int x = 0; x < n; ++x) {
      uint64_t below[kMaxPosetSize], above[kMaxPosetSize];
      int nb = 0, na = 0;
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        if (r.bit(x, y)) below[nb++] = inv[y];
        if (r.bit(y, x)) above[na++] = inv[y];
      }
      std::sort(below, below + nb);
      std::sort(above, above + na);
      uint64_t h = inv[x];
      for (int i = 0; i < nb; ++i) h = mix(h, below[i]);
      h = mix(h, 0xabcdef12345ull);
      for (int i = 0; i < na; ++i) h = mix(h, above[i]);
      next[x] = h;
    }
    inv = next;
  }
  return inv;
}

// dense ranks of the invariant keys (sorted by value, so the ranking is
// itself conjugation-invariant)
inline std::vector<int> invariant_ranks(const std::vector<uint64_t>& inv) {
  std::vector<uint64_t> sorted = inv;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> rank(inv.size());
  for (size_t i = 0; i < inv.size(); ++i)
    rank[i] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), inv[i]) - sorted.begin());
  return rank;
}

struct CanonSearch {
  const Relation* r;
  int n;
  uint64_t best;
  std::array<uint8_t, kMaxPosetSize> best_order;   // position -> vertex
  std::array<uint8_t, kMaxPosetSize> order;        // position -> vertex
  std::array<uint8_t, kMaxPosetSize> try_sequence; // candidate iteration order
  std::array<uint64_t, kMaxPosetSize + 1> diag_suffix;

  uint64_t pos_bit(int i, int j) const {
    return uint64_t{1} << (n * n - 1 - (i * n + j));
  }

  void run(int k, uint32_t used, uint64_t key) {
    if ((key | diag_suffix[k]) > best) return;
    if (k == n) {
      if (key < best) {
        best = key;
        best_order = order;
      }
      return;
    }
    for (int t = 0; t < n; ++t) {
      int v = try_sequence[t];
      if ((used >> v) & 1) continue;
      uint64_t next = key;
      for (int j = 0; j < k; ++j) {
        int w = order[j];
        if (r->bit(v, w)) next |= pos_bit(k, j);
        if (r->bit(w, v)) next |= pos_bit(j, k);
      }
      next |= pos_bit(k, k);  // reflexive diagonal
      order[k] = static_cast<uint8_t>(v);
      run(k + 1, used | (1u << v), next);
    }
  }
};

}  // namespace detail

// Lexicographically least bit-matrix encoding over all conjugates.
inline Relation canonical_form(const Relation& r) {
  if (r.n > kMaxPosetSize)
    throw std::invalid_argument("canonical_form: size restricted to n <= 8");
  if (!is_order(r)) throw std::invalid_argument("canonical_form: not an order");
  if (r.n <= 1) return r;

  auto inv = detail::vertex_invariants(r);
  auto rank = detail::invariant_ranks(inv);

  detail::CanonSearch s;
  s.r = &r;
  s.n = r.n;
  for (int i = 0; i < r.n; ++i) s.try_sequence[i] = static_cast<uint8_t>(i);
  std::stable_sort(s.try_sequence.begin(), s.try_sequence.begin() + r.n,
                   [&](uint8_t a, uint8_t b) { return rank[a] < rank[b]; });
  s.diag_suffix[r.n] = 0;
  for (int k = r.n - 1; k >= 0; --k)
    s.diag_suffix[k] = s.diag_suffix[k + 1] | s.pos_bit(k, k);
  s.best = ~uint64_t{0};
  s.run(0, 0, 0);

  // rebuild the canonical matrix from the winning order
  Permutation sigma;  // vertex -> position
  sigma.n = r.n;
  for (int pos = 0; pos < r.n; ++pos) sigma.img[s.best_order[pos]] = static_cast<uint8_t>(pos);
  return conjugate(sigma, r);
}

// Order and full element list of Aut(E,R) by backtracking over
// invariant-compatible bijections.
inline std::pair<uint64_t, std::vector<Permutation>> aut_group(const Relation& r) {
  if (r.n > kMaxPosetSize)
    throw std::invalid_argument("aut_group: size restricted to n <= 8");
  if (!is_order(r)) throw std::invalid_argument("aut_group: not an order");
  if (r.n == 0) return {1, {identity_perm(0)}};

  auto rank = detail::invariant_ranks(detail::vertex_invariants(r));
  std::vector<Permutation> elements;
  Permutation p;
  p.n = r.n;
  uint32_t used = 0;

  auto dfs = [&](auto&& self, int i) -> void {
    if (i == r.n) {
      elements.push_back(p);
      return;
    }
    for (int v = 0; v < r.n; ++v) {
      if ((used >> v) & 1) continue;
      if (rank[v] != rank[i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        int w = p.img[j];
        if (r.bit(v, w) != r.bit(i, j) || r.bit(w, v) != r.bit(j, i)) ok = false;
      }
      if (!ok) continue;
      p.img[i] = static_cast<uint8_t>(v);
      used |= 1u << v;
      self(self, i + 1);
      used &= ~(1u << v);
    }
  };
  dfs(dfs, 0);
  return {elements.size(), elements};
}

namespace detail {

inline std::vector<uint16_t> downsets_of(const Relation& r) {
  std::vector<uint16_t> out;
  int n = r.n;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if ((s >> x) & 1) ok = (r.rows[x] & ~s) == 0;
    if (ok) out.push_back(static_cast<uint16_t>(s));
  }
  return out;
}

inline std::vector<uint16_t> upsets_of(const Relation& r) {
  std::vector<uint16_t> cols(r.n, 0);
  std::vector<uint16_t> colmask(r.n, 0);
  for (int z = 0; z < r.n; ++z)
    for (int x = 0; x < r.n; ++x)
      if (r.bit(z, x)) colmask[x] = static_cast<uint16_t>(colmask[x] | (1u << z));
  std::vector<uint16_t> out;
  for (uint32_t s = 0; s < (1u << r.n); ++s) {
    bool ok = true;
    for (int x = 0; x < r.n && ok; ++x)
      if ((s >> x) & 1) ok = (colmask[x] & ~s) == 0;
    if (ok) out.push_back(static_cast<uint16_t>(s));
  }
  return out;
}

inline uint16_t apply_perm_mask(const Permutation& g, uint16_t s) {
  uint16_t out = 0;
  while (s != 0) {
    int i = std::countr_zero(s);
    s &= static_cast<uint16_t>(s - 1);
    out |= static_cast<uint16_t>(1u << g.img[i]);
  }
  return out;
}

}  // namespace detail

// One class per isomorphism type, sorted by canonical encoding.
inline std::vector<PosetClass> enumerate_posets(int e, int threads = 1,
                                                ExtendMode mode = ExtendMode::by_maximal) {
  if (e < 0 || e > kMaxPosetSize)
    throw std::invalid_argument("enumerate_posets: size restricted to 0 <= e <= 8");

  std::vector<uint64_t> level_keys = {0};  // size-0 poset
  std::vector<std::vector<Permutation>> level_auts = {{identity_perm(0)}};

  for (int k = 0; k < e; ++k) {
    size_t parents = level_keys.size();
    auto chunks = parallel_map<std::vector<uint64_t>>(
        parents, threads, [&](size_t pi) {
          Relation parent = decode_key(level_keys[pi], k);
          const auto& aut = level_auts[pi];
          std::vector<uint16_t> masks = (mode == ExtendMode::by_maximal)
                                            ? detail::downsets_of(parent)
                                            : detail::upsets_of(parent);
          // one representative mask per parent-automorphism orbit
          std::vector<uint16_t> reps;
          for (uint16_t s : masks) {
            uint16_t least = s;
            for (const auto& g : aut)
              least = std::min(least, detail::apply_perm_mask(g, s));
            if (least == s) reps.push_back(s);
          }
          std::vector<uint64_t> keys;
          keys.reserve(reps.size());
          for (uint16_t s : reps) {
            Relation child = parent;
            child.n = k + 1;
            if (mode == ExtendMode::by_maximal) {
              child.rows[k] = static_cast<uint16_t>(s | (1u << k));
            } else {
              child.rows[k] = static_cast<uint16_t>(1u << k);
              while (s != 0) {
                int x = std::countr_zero(s);
                s &= static_cast<uint16_t>(s - 1);
                child.rows[x] = static_cast<uint16_t>(child.rows[x] | (1u << k));
              }
            }
            keys.push_back(encode_key(canonical_form(child)));
          }
          return keys;
        });

    std::vector<uint64_t> next;
    for (auto& c : chunks) next.insert(next.end(), c.begin(), c.end());
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    std::vector<std::vector<Permutation>> next_auts =
        parallel_map<std::vector<Permutation>>(next.size(), threads, [&](size_t i) {
          return aut_group(decode_key(next[i], k + 1)).second;
        });
    level_keys = std::move(next);
    level_auts = std::move(next_auts);
  }

  std::vector<PosetClass> out(level_keys.size());
  for (size_t i = 0; i < level_keys.size(); ++i) {
    out[i].e = e;
    out[i].canon = decode_key(level_keys[i], e);
    out[i].class_id = static_cast<int>(i);
    out[i].aut_elements = std::move(level_auts[i]);
    out[i].aut_order = out[i].aut_elements.size();
  }
  return out;
}

// Number of conjugacy classes of a permutation group given by its full
// element list.
inline int conjugacy_class_count(const std::vector<Permutation>& group) {
  if (group.empty()) throw std::invalid_argument("conjugacy_class_count: not a group");
  int n = group[0].n;
  auto pack = [n](const Permutation& p) {
    uint64_t k = 0;
    for (int i = 0; i < n; ++i) k |= static_cast<uint64_t>(p.img[i]) << (8 * i);
    return k;
  };
  std::unordered_map<uint64_t, int> index;
  index.reserve(group.size() * 2);
  for (size_t i = 0; i < group.size(); ++i) {
    if (group[i].n != n || !is_permutation(group[i]))
      throw std::invalid_argument("conjugacy_class_count: not a group");
    if (!index.emplace(pack(group[i]), static_cast<int>(i)).second)
      throw std::invalid_argument("conjugacy_class_count: duplicate element");
  }
  auto contains = [&](const Permutation& p) { return index.count(pack(p)) != 0; };
  if (!contains(identity_perm(n)))
    throw std::invalid_argument("conjugacy_class_count: missing identity");
  for (const auto& g : group)
    if (!contains(inverse(g)))
      throw std::invalid_argument("conjugacy_class_count: missing inverse");
  if (group.size() <= 512) {
    for (const auto& g : group)
      for (const auto& h : group)
        if (!contains(compose(g, h)))
          throw std::invalid_argument("conjugacy_class_count: not closed");
  } else {
    // full closure is quadratic; sample deterministically for big groups
    for (size_t i = 0; i < group.size(); ++i) {
      size_t j = (i * 2654435761u + 17) % group.size();
      if (!contains(compose(group[i], group[i])) ||
          !contains(compose(group[i], group[j])))
        throw std::invalid_argument("conjugacy_class_count: not closed");
    }
  }

  std::vector<bool> visited(group.size(), false);
  int classes = 0;
  for (size_t i = 0; i < group.size(); ++i) {
    if (visited[i]) continue;
    ++classes;
    for (const auto& h : group) {
      Permutation c = compose(compose(h, group[i]), inverse(h));
      visited[static_cast<size_t>(index.at(pack(c)))] = true;
    }
  }
  return classes;
}

// All labeled orders on e points by exhaustive filtering (e <= 5).
inline uint64_t labeled_order_count_exhaustive(int e) {
  if (e < 0 || e > 5)
    throw std::invalid_argument("labeled_order_count_exhaustive: e <= 5");
  if (e == 0) return 1;
  int off = e * e - e;
  uint64_t count = 0;
  for (uint64_t code = 0; code < (uint64_t{1} << off); ++code) {
    Relation r = empty_relation(e);
    int b = 0;
    for (int z = 0; z < e; ++z) {
      r.set(z, z);
      for (int x = 0; x < e; ++x) {
        if (x == z) continue;
        if ((code >> b) & 1) r.set(z, x);
        ++b;
      }
    }
    if (is_order(r)) ++count;
  }
  return count;
}

// Distinct canonical forms among all labeled orders (e <= 5); an
// enumeration cross-check independent of the augmentation path.
inline uint64_t labeled_class_count_exhaustive(int e) {
  if (e < 0 || e > 5)
    throw std::invalid_argument("labeled_class_count_exhaustive: e <= 5");
  if (e == 0) return 1;
  int off = e * e - e;
  std::vector<uint64_t> keys;
  for (uint64_t code = 0; code < (uint64_t{1} << off); ++code) {
    Relation r = empty_relation(e);
    int b = 0;
    for (int z = 0; z < e; ++z) {
      r.set(z, z);
      for (int x = 0; x < e; ++x) {
        if (x == z) continue;
        if ((code >> b) & 1) r.set(z, x);
        ++b;
      }
    }
    if (is_order(r)) keys.push_back(encode_key(canonical_form(r)));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys.size();
}

// Cached catalog; enumeration runs once per size per process.
inline const std::vector<PosetClass>& poset_catalog(int e, int threads = 1) {
  if (e < 0 || e > kMaxPosetSize)
    throw std::invalid_argument("poset_catalog: size restricted to 0 <= e <= 8");
  static std::mutex mu;
  static std::vector<std::vector<PosetClass>> cache(kMaxPosetSize + 1);
  static std::array<bool, kMaxPosetSize + 1> ready{};
  std::lock_guard<std::mutex> lock(mu);
  if (!ready[e]) {
    cache[e] = enumerate_posets(e, threads);
    ready[e] = true;
  }
  return cache[e];
}

}  // namespace relmon

#endif  // RELMON_POSET_ENUM_HPP_
