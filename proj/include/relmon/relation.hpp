// Relations on a finite set as bit-matrices, with monoid composition,
// permutation conjugation and order predicates.
//
// A relation R on {0,..,n-1} stores bit x of rows[z] iff the pair (z,x)
// is in R.  For order relations this reads "x <= z", so rows[z] is the
// set of elements below z and column x is the set of elements above x.
// Composition is the boolean matrix product with the left factor first,
// matching (z,x) in RS iff there is y with (z,y) in R and (y,x) in S.

#ifndef RELMON_RELATION_HPP_
#define RELMON_RELATION_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace relmon {

constexpr int kMaxRelationSize = 16;

struct Relation {
  int n = 0;
  std::array<uint16_t, kMaxRelationSize> rows{};

  bool bit(int z, int x) const { return (rows[z] >> x) & 1; }
  void set(int z, int x) { rows[z] |= static_cast<uint16_t>(1u << x); }
  void clear(int z, int x) { rows[z] &= static_cast<uint16_t>(~(1u << x)); }

  friend bool operator==(const Relation& a, const Relation& b) {
    if (a.n != b.n) return false;
    for (int z = 0; z < a.n; ++z)
      if (a.rows[z] != b.rows[z]) return false;
    return true;
  }
  friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }
};

struct Permutation {
  int n = 0;
  std::array<uint8_t, kMaxRelationSize> img{};

  int operator()(int x) const { return img[x]; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    if (a.n != b.n) return false;
    for (int i = 0; i < a.n; ++i)
      if (a.img[i] != b.img[i]) return false;
    return true;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    for (int i = 0; i < a.n; ++i)
      if (a.img[i] != b.img[i]) return a.img[i] < b.img[i];
    return false;
  }
};

inline void check_size(int n) {
  if (n < 0 || n > kMaxRelationSize)
    throw std::invalid_argument("relation size out of range [0,16]");
}

inline Relation empty_relation(int n) {
  check_size(n);
  Relation r;
  r.n = n;
  return r;
}

inline Relation full_relation(int n) {
  check_size(n);
  Relation r;
  r.n = n;
  uint16_t m = static_cast<uint16_t>((n == 16) ? 0xffffu : ((1u << n) - 1));
  for (int z = 0; z < n; ++z) r.rows[z] = m;
  return r;
}

inline Permutation identity_perm(int n) {
  check_size(n);
  Permutation p;
  p.n = n;
  for (int i = 0; i < n; ++i) p.img[i] = static_cast<uint8_t>(i);
  return p;
}

inline bool is_permutation(const Permutation& p) {
  uint32_t seen = 0;
  for (int i = 0; i < p.n; ++i) {
    if (p.img[i] >= p.n) return false;
    seen |= 1u << p.img[i];
  }
  return seen == ((p.n == 0) ? 0u : ((1u << p.n) - 1));
}

// (a o b)(x) = a(b(x)); matches delta(a o b) == compose(delta(a), delta(b)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n != b.n) throw std::invalid_argument("permutation size mismatch");
  Permutation r;
  r.n = a.n;
  for (int x = 0; x < a.n; ++x) r.img[x] = a.img[b.img[x]];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r;
  r.n = p.n;
  for (int x = 0; x < p.n; ++x) r.img[p.img[x]] = static_cast<uint8_t>(x);
  return r;
}

inline Relation compose(const Relation& r, const Relation& s) {
  if (r.n != s.n) throw std::invalid_argument("relation size mismatch");
  Relation out;
  out.n = r.n;
  for (int z = 0; z < r.n; ++z) {
    uint16_t acc = 0;
    uint16_t ys = r.rows[z];
    while (ys != 0) {
      int y = std::countr_zero(ys);
      ys &= static_cast<uint16_t>(ys - 1);
      acc |= s.rows[y];
    }
    out.rows[z] = acc;
  }
  return out;
}

// The graph of sigma: delta = {(sigma(x), x)}.
inline Relation delta(const Permutation& sigma) {
  Relation r;
  r.n = sigma.n;
  for (int x = 0; x < sigma.n; ++x) r.set(sigma.img[x], x);
  return r;
}

// ^sigma R = delta(sigma) R delta(sigma^-1): relabels pairs elementwise.
inline Relation conjugate(const Permutation& sigma, const Relation& r) {
  if (sigma.n != r.n) throw std::invalid_argument("size mismatch in conjugate");
  Relation out;
  out.n = r.n;
  for (int z = 0; z < r.n; ++z) {
    uint16_t bits = r.rows[z];
    while (bits != 0) {
      int x = std::countr_zero(bits);
      bits &= static_cast<uint16_t>(bits - 1);
      out.set(sigma.img[z], sigma.img[x]);
    }
  }
  return out;
}

inline Relation opposite(const Relation& r) {
  Relation out;
  out.n = r.n;
  for (int z = 0; z < r.n; ++z) {
    uint16_t bits = r.rows[z];
    while (bits != 0) {
      int x = std::countr_zero(bits);
      bits &= static_cast<uint16_t>(bits - 1);
      out.set(x, z);
    }
  }
  return out;
}

inline bool is_order(const Relation& r) {
  // reflexive
  for (int z = 0; z < r.n; ++z)
    if (!r.bit(z, z)) return false;
  // antisymmetric
  for (int z = 0; z < r.n; ++z)
    for (int x = z + 1; x < r.n; ++x)
      if (r.bit(z, x) && r.bit(x, z)) return false;
  // transitive: R o R subset of R
  for (int z = 0; z < r.n; ++z) {
    uint16_t acc = 0;
    uint16_t ys = r.rows[z];
    while (ys != 0) {
      int y = std::countr_zero(ys);
      ys &= static_cast<uint16_t>(ys - 1);
      acc |= r.rows[y];
    }
    if ((acc & ~r.rows[z]) != 0) return false;
  }
  return true;
}

// Row-major bit string of the matrix as an integer, (0,0) most
// significant.  For a fixed n, numeric order of keys equals
// lexicographic order of the bit-matrix encodings.  Only for n <= 8.
inline uint64_t encode_key(const Relation& r) {
  if (r.n > 8) throw std::invalid_argument("encode_key needs n <= 8");
  uint64_t key = 0;
  int nn = r.n * r.n;
  for (int z = 0; z < r.n; ++z)
    for (int x = 0; x < r.n; ++x)
      if (r.bit(z, x)) key |= uint64_t{1} << (nn - 1 - (z * r.n + x));
  return key;
}

inline Relation decode_key(uint64_t key, int n) {
  if (n > 8) throw std::invalid_argument("decode_key needs n <= 8");
  Relation r = empty_relation(n);
  int nn = n * n;
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      if ((key >> (nn - 1 - (z * n + x))) & 1) r.set(z, x);
  return r;
}

// Text fixture format: n on the first line, then n lines of n '0'/'1'
// characters (row z, column x).  Bit-exact round trip.
inline std::string to_text(const Relation& r) {
  std::string out = std::to_string(r.n);
  out.push_back('\n');
  for (int z = 0; z < r.n; ++z) {
    for (int x = 0; x < r.n; ++x) out.push_back(r.bit(z, x) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

inline Relation parse_text(const std::string& text) {
  std::istringstream in(text);
  int n = -1;
  if (!(in >> n)) throw std::invalid_argument("relation text: missing size");
  check_size(n);
  Relation r = empty_relation(n);
  for (int z = 0; z < n; ++z) {
    std::string line;
    if (!(in >> line) || static_cast<int>(line.size()) != n)
      throw std::invalid_argument("relation text: bad row");
    for (int x = 0; x < n; ++x) {
      if (line[x] == '1')
        r.set(z, x);
      else if (line[x] != '0')
        throw std::invalid_argument("relation text: bad character");
    }
  }
  return r;
}

}  // namespace relmon

#endif  // RELMON_RELATION_HPP_
