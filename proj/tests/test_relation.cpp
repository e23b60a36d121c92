#include <doctest.h>

#include <random>

#include "relmon/relation.hpp"

using namespace relmon;

namespace {

Relation random_relation(std::mt19937& rng, int n) {
  Relation r = empty_relation(n);
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x)
      if (rng() % 2) r.set(z, x);
  return r;
}

Permutation random_permutation(std::mt19937& rng, int n) {
  Permutation p = identity_perm(n);
  for (int i = n - 1; i > 0; --i) std::swap(p.img[i], p.img[rng() % (i + 1)]);
  return p;
}

}  // namespace

TEST_CASE("composition follows the defining formula") {
  // n=2, R={(1,2)}, S={(2,1)} -> {(1,1)} with 1-based pairs
  Relation r = empty_relation(2), s = empty_relation(2);
  r.set(0, 1);
  s.set(1, 0);
  Relation expected = empty_relation(2);
  expected.set(0, 0);
  CHECK(compose(r, s) == expected);
}

TEST_CASE("identity and empty relations under composition") {
  std::mt19937 rng(42);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 1 + static_cast<int>(rng() % 8);
    Relation r = random_relation(rng, n);
    Relation id = delta(identity_perm(n));
    CHECK(compose(id, r) == r);
    CHECK(compose(r, id) == r);
    CHECK(compose(empty_relation(n), r) == empty_relation(n));
  }
}

TEST_CASE("composition is associative") {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 1000; ++iter) {
    int n = 1 + static_cast<int>(rng() % 6);
    Relation a = random_relation(rng, n);
    Relation b = random_relation(rng, n);
    Relation c = random_relation(rng, n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("delta is the graph of the permutation") {
  Relation diag3 = delta(identity_perm(3));
  for (int z = 0; z < 3; ++z)
    for (int x = 0; x < 3; ++x) CHECK(diag3.bit(z, x) == (z == x));

  Permutation swap2;
  swap2.n = 2;
  swap2.img = {1, 0};
  Relation d = delta(swap2);
  CHECK(d.bit(1, 0));
  CHECK(d.bit(0, 1));
  CHECK_FALSE(d.bit(0, 0));
  CHECK(compose(delta(swap2), delta(inverse(swap2))) == delta(identity_perm(2)));
}

TEST_CASE("conjugation relabels and is a monoid automorphism") {
  // order 1 <= 2 stored as pair (2,1)
  Relation order = empty_relation(2);
  order.set(0, 0);
  order.set(1, 1);
  order.set(1, 0);
  Permutation swap2;
  swap2.n = 2;
  swap2.img = {1, 0};
  Relation expected = empty_relation(2);
  expected.set(0, 0);
  expected.set(1, 1);
  expected.set(0, 1);
  CHECK(conjugate(swap2, order) == expected);
  CHECK(conjugate(identity_perm(2), order) == order);
  CHECK(conjugate(swap2, delta(identity_perm(2))) == delta(identity_perm(2)));

  std::mt19937 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 1 + static_cast<int>(rng() % 6);
    Relation a = random_relation(rng, n);
    Relation b = random_relation(rng, n);
    Permutation s = random_permutation(rng, n);
    CHECK(conjugate(s, compose(a, b)) == compose(conjugate(s, a), conjugate(s, b)));
    CHECK(is_order(conjugate(s, a)) == is_order(a));
  }
}

TEST_CASE("is_order counts 19 labeled orders on 3 points") {
  int count = 0;
  for (uint32_t code = 0; code < (1u << 9); ++code) {
    Relation r = empty_relation(3);
    for (int z = 0; z < 3; ++z)
      r.rows[z] = static_cast<uint16_t>((code >> (3 * z)) & 7);
    if (is_order(r)) ++count;
  }
  CHECK(count == 19);
  CHECK(is_order(delta(identity_perm(2))));
  CHECK_FALSE(is_order(full_relation(2)));
}

TEST_CASE("opposite is the transpose involution") {
  std::mt19937 rng(9);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 1 + static_cast<int>(rng() % 8);
    Relation r = random_relation(rng, n);
    CHECK(opposite(opposite(r)) == r);
  }
  CHECK(opposite(delta(identity_perm(4))) == delta(identity_perm(4)));
  Relation chain2 = empty_relation(2);
  chain2.set(0, 0);
  chain2.set(1, 1);
  chain2.set(1, 0);
  Relation reversed = empty_relation(2);
  reversed.set(0, 0);
  reversed.set(1, 1);
  reversed.set(0, 1);
  CHECK(opposite(chain2) == reversed);
}

TEST_CASE("text format round trip is bit exact") {
  std::mt19937 rng(33);
  for (int iter = 0; iter < 500; ++iter) {
    int n = static_cast<int>(rng() % 9);
    Relation r = random_relation(rng, n);
    CHECK(parse_text(to_text(r)) == r);
  }
  CHECK(to_text(delta(identity_perm(2))) == "2\n10\n01\n");
  CHECK_THROWS_AS(parse_text("2\n10\n0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_text("2\n10\n0x\n"), std::invalid_argument);
}

TEST_CASE("size mismatches are rejected") {
  CHECK_THROWS_AS(compose(empty_relation(2), empty_relation(3)), std::invalid_argument);
  Permutation p = identity_perm(3);
  CHECK_THROWS_AS(conjugate(p, empty_relation(2)), std::invalid_argument);
}

TEST_CASE("encode and decode keys are inverse") {
  std::mt19937 rng(77);
  for (int iter = 0; iter < 500; ++iter) {
    int n = static_cast<int>(rng() % 9);
    Relation r = random_relation(rng, n);
    CHECK(decode_key(encode_key(r), n) == r);
  }
}
