#include <doctest.h>

#include <random>

#include "relmon/boolean_rank.hpp"

using namespace relmon;

TEST_CASE("boolean rank golden values") {
  CHECK(boolean_rank(empty_relation(0)) == 0);
  CHECK(boolean_rank(empty_relation(4)) == 0);
  for (int n = 1; n <= 5; ++n) CHECK(boolean_rank(full_relation(n)) == 1);
  // the identity needs one rectangle per point: no rectangle inside the
  // diagonal covers two cells
  CHECK(boolean_rank(delta(identity_perm(3))) == 3);
  CHECK(boolean_rank(delta(identity_perm(5))) == 5);
  CHECK_THROWS_AS(boolean_rank(empty_relation(6)), std::invalid_argument);
}

TEST_CASE("essentiality at n=1 and n=2") {
  Relation point = full_relation(1);
  CHECK(is_essential(point));
  CHECK_FALSE(is_essential(empty_relation(1)));
  CHECK(is_essential(delta(identity_perm(2))));

  // the inessential relations on 2 points are the empty one plus the 9
  // rectangles A x B; exhaustive rank confirms 6 essential ones
  int essential = 0;
  for (uint32_t code = 0; code < 16; ++code) {
    Relation r = empty_relation(2);
    r.rows[0] = static_cast<uint16_t>(code & 3);
    r.rows[1] = static_cast<uint16_t>((code >> 2) & 3);
    if (is_essential(r)) ++essential;
  }
  CHECK(essential == 6);
}

TEST_CASE("essential algebra dimensions") {
  CHECK(essential_algebra_dim(0) == 1);
  CHECK(essential_algebra_dim(1) == 1);
  CHECK(essential_algebra_dim(2) == 6);
  // exhaustive rank over all 512 relations; splits as 114 + 42 against
  // the semisimple part and radical of the essential quotient at n=3
  CHECK(essential_algebra_dim(3) == 156);
  CHECK_THROWS_AS(essential_algebra_dim(5), std::invalid_argument);
}

TEST_CASE("rank is bounded by n and submultiplicative under composition") {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 1 + static_cast<int>(rng() % 4);
    Relation a = empty_relation(n), b = empty_relation(n);
    for (int z = 0; z < n; ++z) {
      a.rows[z] = static_cast<uint16_t>(rng() & ((1u << n) - 1));
      b.rows[z] = static_cast<uint16_t>(rng() & ((1u << n) - 1));
    }
    int ra = boolean_rank(a), rb = boolean_rank(b);
    CHECK(ra <= n);
    CHECK(boolean_rank(compose(a, b)) <= std::min(ra, rb));
  }
}
