#include <doctest.h>

#include <random>

#include "relmon/bigint.hpp"

using relmon::BigInt;

TEST_CASE("small arithmetic and decimal round trip") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-17).to_string() == "-17");
  CHECK((BigInt(12) + BigInt(30)).to_string() == "42");
  CHECK((BigInt(12) - BigInt(30)).to_string() == "-18");
  CHECK((BigInt(-6) * BigInt(-7)).to_string() == "42");
  CHECK(BigInt::from_decimal("18446568932288588616").to_string() == "18446568932288588616");
  CHECK(BigInt::from_decimal("-000123").to_string() == "-123");
}

TEST_CASE("powers of two and factorial digits") {
  CHECK(BigInt::pow2(64).to_string() == "18446744073709551616");
  CHECK(BigInt::pow2(0).to_string() == "1");
  BigInt fact = 1;
  for (int i = 2; i <= 30; ++i) fact *= BigInt(i);
  CHECK(fact.to_string() == "265252859812191058636308480000000");
  CHECK(BigInt::pow_u64(3, 40).to_string() == "12157665459056928801");
}

TEST_CASE("division: quotient and remainder reconstruct the dividend") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    int alimbs = 1 + static_cast<int>(rng() % 6);
    int blimbs = 1 + static_cast<int>(rng() % alimbs);
    BigInt a = 0, b = 0;
    for (int i = 0; i < alimbs; ++i) a = a * BigInt::pow2(64) + BigInt::from_u64(rng());
    for (int i = 0; i < blimbs; ++i) b = b * BigInt::pow2(64) + BigInt::from_u64(rng());
    if (b.is_zero()) b = 1;
    if (rng() % 2) a = -a;
    if (rng() % 2) b = -b;
    auto [q, r] = BigInt::divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    // remainder takes the sign of the dividend (or is zero)
    CHECK((r.is_zero() || r.sign() == a.sign()));
  }
}

TEST_CASE("exact division checks and failures") {
  BigInt a = BigInt::from_decimal("123456789123456789123456789");
  BigInt b = BigInt::from_decimal("987654321987");
  CHECK(BigInt::div_exact(a * b, b) == a);
  CHECK((a * b).divisible_by(b));
  CHECK_THROWS_AS(BigInt::div_exact(BigInt(7), BigInt(2)), std::logic_error);
  CHECK_THROWS_AS(BigInt::divrem(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("comparisons") {
  CHECK(BigInt(-5) < BigInt(3));
  CHECK(BigInt(3) < BigInt::pow2(100));
  CHECK(-BigInt::pow2(100) < BigInt(-3));
  CHECK(BigInt::pow2(64) == BigInt::from_decimal("18446744073709551616"));
  CHECK(BigInt(100).bit_length() == 7);
}
