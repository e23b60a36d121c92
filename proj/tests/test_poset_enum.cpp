#include <doctest.h>

#include <random>

#include "relmon/poset_enum.hpp"

using namespace relmon;

namespace {

Permutation random_permutation(std::mt19937& rng, int n) {
  Permutation p = identity_perm(n);
  for (int i = n - 1; i > 0; --i) std::swap(p.img[i], p.img[rng() % (i + 1)]);
  return p;
}

Relation chain(int n) {
  Relation r = empty_relation(n);
  for (int z = 0; z < n; ++z)
    for (int x = 0; x <= z; ++x) r.set(z, x);
  return r;
}

}  // namespace

TEST_CASE("canonical form: conjugates collapse, idempotent, antichain fixed") {
  std::mt19937 rng(100);
  for (int e = 1; e <= 4; ++e) {
    for (const auto& cls : enumerate_posets(e)) {
      for (int iter = 0; iter < 20; ++iter) {
        Permutation s = random_permutation(rng, e);
        Relation conj = conjugate(s, cls.canon);
        CHECK(canonical_form(conj) == canonical_form(cls.canon));
      }
      CHECK(canonical_form(cls.canon) == cls.canon);  // representatives are canonical
    }
  }
  Relation anti = delta(identity_perm(5));
  CHECK(canonical_form(anti) == anti);
  CHECK_THROWS_AS(canonical_form(full_relation(2)), std::invalid_argument);
}

TEST_CASE("canonical form equals the brute-force minimum over all conjugates") {
  // independent oracle: scan every permutation
  auto brute_min = [](const Relation& r) {
    std::vector<int> order(r.n);
    for (int i = 0; i < r.n; ++i) order[i] = i;
    uint64_t best = ~uint64_t{0};
    Permutation p;
    p.n = r.n;
    do {
      for (int i = 0; i < r.n; ++i) p.img[i] = static_cast<uint8_t>(order[i]);
      best = std::min(best, encode_key(conjugate(p, r)));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
  };
  for (int e = 0; e <= 5; ++e)
    for (const auto& cls : enumerate_posets(e))
      CHECK(encode_key(canonical_form(cls.canon)) == brute_min(cls.canon));
  // also through random relabelings of size-6 classes
  std::mt19937 rng(7);
  const auto& six = enumerate_posets(6);
  for (int iter = 0; iter < 40; ++iter) {
    const Relation& r = six[rng() % six.size()].canon;
    Relation conj = conjugate(random_permutation(rng, 6), r);
    CHECK(encode_key(canonical_form(conj)) == brute_min(conj));
  }
}

TEST_CASE("class counts by size") {
  static const size_t expected[9] = {1, 1, 2, 5, 16, 63, 318, 2045, 16999};
  for (int e = 0; e <= 6; ++e) CHECK(enumerate_posets(e).size() == expected[e]);
  // sizes 7 and 8 via the shared catalog (also used by later tests)
  CHECK(poset_catalog(7, 2).size() == expected[7]);
  CHECK(poset_catalog(8, 2).size() == expected[8]);
  CHECK_THROWS_AS(enumerate_posets(9), std::invalid_argument);
}

TEST_CASE("dual generation order produces identical classes") {
  for (int e = 0; e <= 6; ++e) {
    auto by_max = enumerate_posets(e, 1, ExtendMode::by_maximal);
    auto by_min = enumerate_posets(e, 2, ExtendMode::by_minimal);
    REQUIRE(by_max.size() == by_min.size());
    for (size_t i = 0; i < by_max.size(); ++i) CHECK(by_max[i].canon == by_min[i].canon);
  }
}

TEST_CASE("labeled order counts cross-check") {
  static const uint64_t labeled[6] = {1, 1, 3, 19, 219, 4231};
  for (int e = 0; e <= 5; ++e) {
    CHECK(labeled_order_count_exhaustive(e) == labeled[e]);
    uint64_t orbit_sum = 0;
    for (const auto& cls : enumerate_posets(e)) orbit_sum += cls.labeled_count();
    CHECK(orbit_sum == labeled[e]);
  }
  CHECK(labeled_class_count_exhaustive(4) == 16);
  CHECK(labeled_class_count_exhaustive(5) == 63);
}

TEST_CASE("automorphism groups of the size-3 posets") {
  // antichain S3, chain trivial, the fork shapes C2
  Relation anti = delta(identity_perm(3));
  CHECK(aut_group(anti).first == 6);
  CHECK(aut_group(chain(3)).first == 1);

  Relation v = empty_relation(3);  // 0 < 1, 0 < 2
  for (int i = 0; i < 3; ++i) v.set(i, i);
  v.set(1, 0);
  v.set(2, 0);
  CHECK(aut_group(v).first == 2);

  Relation chain2 = chain(2);
  CHECK(aut_group(chain2).first == 1);
}

TEST_CASE("automorphism elements stabilize and are closed") {
  std::mt19937 rng(321);
  for (int e = 1; e <= 5; ++e) {
    const auto& classes = enumerate_posets(e);
    for (const auto& cls : classes) {
      auto [order, elements] = aut_group(cls.canon);
      CHECK(order == elements.size());
      CHECK(order == cls.aut_order);
      for (const auto& s : elements) CHECK(conjugate(s, cls.canon) == cls.canon);
      // orbit-stabilizer: labeled copies times |Aut| = e!
      uint64_t fact = 1;
      for (int i = 2; i <= e; ++i) fact *= i;
      CHECK(cls.labeled_count() * order == fact);
    }
  }
}

TEST_CASE("conjugacy class counts") {
  CHECK(conjugacy_class_count({identity_perm(0)}) == 1);
  CHECK(conjugacy_class_count({identity_perm(4)}) == 1);

  Permutation swap01 = identity_perm(2);
  std::swap(swap01.img[0], swap01.img[1]);
  CHECK(conjugacy_class_count({identity_perm(2), swap01}) == 2);

  Relation anti = delta(identity_perm(3));
  auto s3 = aut_group(anti).second;
  REQUIRE(s3.size() == 6);
  CHECK(conjugacy_class_count(s3) == 3);  // cycle types of S3

  // not a group: missing inverse partner of a 3-cycle
  Permutation cyc;
  cyc.n = 3;
  cyc.img = {1, 2, 0};
  CHECK_THROWS_AS(conjugacy_class_count({identity_perm(3), cyc}), std::invalid_argument);
}

TEST_CASE("generation is deterministic") {
  auto a = enumerate_posets(5, 1);
  auto b = enumerate_posets(5, 4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].canon == b[i].canon);
    CHECK(a[i].aut_order == b[i].aut_order);
    CHECK(a[i].class_id == b[i].class_id);
  }
}
