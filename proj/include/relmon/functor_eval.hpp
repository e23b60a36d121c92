// The correspondence-functor action on maps X -> T, the projection onto
// maps whose image contains E, and explicit enumeration of B_{E,R,X}
// with its right Aut(E,R)-action.

#ifndef RELMON_FUNCTOR_EVAL_HPP_
#define RELMON_FUNCTOR_EVAL_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "relmon/lattice.hpp"
#include "relmon/poset_enum.hpp"
#include "relmon/relation.hpp"

namespace relmon {

struct LatticeMap {
  int nX = 0;
  std::vector<int> values;  // lattice element indices, one per point of X

  friend bool operator==(const LatticeMap& a, const LatticeMap& b) {
    return a.nX == b.nX && a.values == b.values;
  }
};

// (U phi)(y) = join over (y,x) in U of phi(x); the empty join is the
// least element of T.
inline LatticeMap act(const Relation& u, const LatticeMap& phi, const DownsetLattice& t) {
  if (u.n != phi.nX) throw std::invalid_argument("act: size mismatch");
  LatticeMap out;
  out.nX = phi.nX;
  out.values.resize(phi.nX);
  for (int y = 0; y < u.n; ++y) {
    uint16_t acc = 0;
    uint16_t xs = u.rows[y];
    while (xs != 0) {
      int x = std::countr_zero(xs);
      xs &= static_cast<uint16_t>(xs - 1);
      acc |= t.elems[phi.values[x]];
    }
    out.values[y] = t.index_of(acc);
  }
  return out;
}

// pi(phi) = phi if every principal ideal appears in the image, zero
// marker otherwise.
inline std::optional<LatticeMap> pi(const LatticeMap& phi, const PosetClass& p,
                                    const DownsetLattice& t) {
  for (int x = 0; x < p.e; ++x) {
    bool hit = false;
    for (int v : phi.values)
      if (v == t.irr[x]) {
        hit = true;
        break;
      }
    if (!hit) return std::nullopt;
  }
  return phi;
}

// All maps X -> T with E contained in the image and the image contained
// in G, in lexicographic order of value arrays.
inline std::vector<LatticeMap> b_enumerate(const PosetClass& p, const GInfo& ginfo,
                                           const DownsetLattice& t, int nX,
                                           uint64_t budget = 10'000'000) {
  if (nX < 0 || nX > 6) throw std::invalid_argument("b_enumerate: nX restricted to 0 <= nX <= 6");
  uint64_t space = 1;
  for (int i = 0; i < nX; ++i) {
    space *= static_cast<uint64_t>(t.size());
    if (space > budget) throw std::invalid_argument("b_enumerate: enumeration budget exceeded");
  }

  // values may only come from G = E together with the fixed points
  std::vector<int> g_set = ginfo.fixed;
  for (int x = 0; x < p.e; ++x) g_set.push_back(t.irr[x]);
  std::sort(g_set.begin(), g_set.end());
  g_set.erase(std::unique(g_set.begin(), g_set.end()), g_set.end());

  std::vector<LatticeMap> out;
  std::vector<int> choice(nX, 0);
  bool done = false;
  while (!done) {
    LatticeMap phi;
    phi.nX = nX;
    phi.values.reserve(nX);
    for (int i = 0; i < nX; ++i) phi.values.push_back(g_set[choice[i]]);
    bool covers = true;
    for (int x = 0; x < p.e && covers; ++x) {
      bool hit = false;
      for (int v : phi.values)
        if (v == t.irr[x]) hit = true;
      covers = hit;
    }
    if (covers) out.push_back(std::move(phi));
    // next tuple in lex order
    done = true;
    if (!g_set.empty()) {
      for (int i = nX - 1; i >= 0; --i) {
        if (++choice[i] < static_cast<int>(g_set.size())) {
          done = false;
          break;
        }
        choice[i] = 0;
      }
    }
    if (nX == 0) done = true;
  }
  return out;
}

// Fixture format for map lists: a JSON array of value-index arrays,
// e.g. [[0,1],[1,0]], meant to sit alongside the lattice export.
inline std::string maps_fixture_json(const std::vector<LatticeMap>& maps) {
  std::string out = "[";
  for (size_t i = 0; i < maps.size(); ++i) {
    if (i) out.push_back(',');
    out.push_back('[');
    for (size_t j = 0; j < maps[i].values.size(); ++j) {
      if (j) out.push_back(',');
      out += std::to_string(maps[i].values[j]);
    }
    out.push_back(']');
  }
  out.push_back(']');
  return out;
}

inline std::vector<LatticeMap> parse_maps_fixture(const std::string& text) {
  std::vector<LatticeMap> maps;
  size_t i = 0;
  auto skip = [&](char c) {
    if (i >= text.size() || text[i] != c)
      throw std::invalid_argument("maps fixture: malformed input");
    ++i;
  };
  skip('[');
  if (i < text.size() && text[i] == ']') return maps;
  for (;;) {
    skip('[');
    LatticeMap phi;
    while (i < text.size() && text[i] != ']') {
      size_t end = i;
      while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
      if (end == i) throw std::invalid_argument("maps fixture: malformed input");
      phi.values.push_back(std::stoi(text.substr(i, end - i)));
      i = end;
      if (i < text.size() && text[i] == ',') ++i;
    }
    skip(']');
    phi.nX = static_cast<int>(phi.values.size());
    maps.push_back(std::move(phi));
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  skip(']');
  return maps;
}

// phi . sigma = sigma^{-1} o phi, with sigma extended to T elementwise.
inline LatticeMap aut_act(const LatticeMap& phi, const Permutation& sigma,
                          const DownsetLattice& t) {
  if (sigma.n != t.e) throw std::invalid_argument("aut_act: size mismatch");
  if (conjugate(sigma, t.order) != t.order)
    throw std::invalid_argument("aut_act: permutation does not stabilize the order");
  Permutation inv = inverse(sigma);
  LatticeMap out;
  out.nX = phi.nX;
  out.values.resize(phi.nX);
  for (int x = 0; x < phi.nX; ++x) {
    uint16_t image = 0;
    uint16_t s = t.elems[phi.values[x]];
    while (s != 0) {
      int i = std::countr_zero(s);
      s &= static_cast<uint16_t>(s - 1);
      image |= static_cast<uint16_t>(1u << inv.img[i]);
    }
    out.values[x] = t.index_of(image);
  }
  return out;
}

}  // namespace relmon

#endif  // RELMON_FUNCTOR_EVAL_HPP_
