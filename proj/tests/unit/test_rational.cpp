#include "doctest.h"

#include "cubeforge/checked.hpp"
#include "cubeforge/rational.hpp"
#include "support.hpp"

using namespace cubeforge;

TEST_SUITE("arithmetic") {

TEST_CASE("rationals normalize and compare exactly") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(4, 3) > Rational(133, 100));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(4, 3).pow(2) * Rational(2) == Rational(32, 9));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational parsing accepts p/q and integers only") {
  CHECK(Rational::parse("4/3") == Rational(4, 3));
  CHECK(Rational::parse("149/100").to_string() == "149/100");
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational::parse("1.33"), DomainError);
  CHECK_THROWS_AS(Rational::parse("4/"), DomainError);
  CHECK_THROWS_AS(Rational::parse("4/0"), DomainError);
}

TEST_CASE("large powers stay exact") {
  // 1000003 is prime, so the power stays in lowest terms.
  const Rational p = Rational(1000003, 1000000).pow(40);
  CHECK(p.num() == boost::multiprecision::pow(BigInt(1000003), 40));
  CHECK(p.den() == boost::multiprecision::pow(BigInt(10), 240));
  CHECK(p > Rational(1));
}

TEST_CASE("checked arithmetic refuses to wrap") {
  CHECK(checked_add(1, 2) == 3);
  CHECK_THROWS_AS(checked_add(UINT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(u64{1} << 32, u64{1} << 32), OverflowError);
  CHECK(checked_mul(u64{1} << 31, u64{1} << 32) == u64{1} << 63);
}

TEST_CASE("isqrt and is_square") {
  CHECK(is_square(2209));
  CHECK(is_square(0));
  CHECK_FALSE(is_square(2210));
  CHECK(isqrt(2210) == 47);
  for (u64 x = 0; x <= 100000; ++x) {
    REQUIRE(is_square(x) == testing::naive_is_square(x));
  }
  // Near the top of the range, where a double seed alone misclassifies.
  const u64 big_root = 0xFFFFFFFFull;
  CHECK(isqrt(UINT64_MAX) == big_root);
  CHECK(is_square(big_root * big_root));
  CHECK_FALSE(is_square(big_root * big_root - 1));
  CHECK_FALSE(is_square(big_root * big_root + 1));
  const u64 r = (u64{1} << 26) + 1;  // r^2 > 2^53
  CHECK(is_square(r * r));
  CHECK_FALSE(is_square(r * r + 1));
  CHECK_FALSE(is_square(r * r - 1));
}

}
