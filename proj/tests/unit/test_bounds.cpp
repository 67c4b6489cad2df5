#include "doctest.h"

#include <cmath>

#include "cubeforge/bounds.hpp"

using namespace cubeforge;

TEST_SUITE("bounds") {

TEST_CASE("values at N = 10^6") {
  const BoundReport r = evaluate_bounds(1000000, 4, Rational(5, 4));
  CHECK(r.values.at("theorem1") == doctest::Approx(18.3805434013320756).epsilon(1e-12));
  CHECK(r.values.at("multiset") == doctest::Approx(55.1416302039962268).epsilon(1e-12));
  CHECK(r.values.at("gyarmati") == doctest::Approx(110.524084463714193).epsilon(1e-12));
  CHECK(r.values.at("crs") == doctest::Approx(30000.0).epsilon(1e-12));
  // 2(k-2)/((k-1) ln c) ln N with k = 4, c = 5/4.
  CHECK(r.values.at("theorem3") == doctest::Approx(4.0 / (3.0 * std::log(1.25)) * std::log(1e6)).epsilon(1e-12));
  CHECK(r.c_squares == Rational(5, 4));
  CHECK_FALSE(r.below_validated_regime);
  CHECK(r.log_convention == "natural");
}

TEST_CASE("sharp constant at the supremum") {
  const BoundReport r = evaluate_bounds(1000000);
  CHECK(r.c_squares == Rational(4, 3));
  CHECK(r.sharp_constant == doctest::Approx(6.95211899356441382).epsilon(1e-12));
  CHECK(r.sharp_constant < 7.0);
  CHECK(r.values.at("theorem1_sharp") == doctest::Approx(18.2548178417765396).epsilon(1e-12));
  CHECK(r.values.at("theorem1_sharp") < r.values.at("theorem1"));
  REQUIRE(r.sharp_slack.has_value());
  CHECK(*r.sharp_slack > 0);
  CHECK(r.values.count("crs") == 0);
  CHECK(r.values.count("theorem3") == 0);
}

TEST_CASE("small and boundary N") {
  const BoundReport tiny = evaluate_bounds(1, 3);
  CHECK(tiny.values.size() == 1);
  CHECK(tiny.values.at("crs") == doctest::Approx(3.0));
  CHECK(tiny.below_validated_regime);
  CHECK(evaluate_bounds(15).values.empty());
  CHECK(evaluate_bounds(16).values.count("theorem1") == 1);
  CHECK(evaluate_bounds(10000).values.at("theorem1") == doctest::Approx(15.5422876445749249).epsilon(1e-12));
}

TEST_CASE("bounds grow with N") {
  double prev_t1 = 0, prev_g = 0;
  for (u64 n = 16; n < 1000000000000ULL; n *= 7) {
    const BoundReport r = evaluate_bounds(n, 3);
    CHECK(r.values.at("theorem1") > prev_t1);
    CHECK(r.values.at("gyarmati") > prev_g);
    prev_t1 = r.values.at("theorem1");
    prev_g = r.values.at("gyarmati");
  }
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(evaluate_bounds(0), DomainError);
  CHECK_THROWS_AS(evaluate_bounds(100, 2), DomainError);
  CHECK_THROWS_AS(evaluate_bounds(100, 3, Rational(2)), DomainError);
  CHECK_THROWS_AS(evaluate_bounds(100, std::nullopt, Rational(3, 2)), DomainError);
  CHECK_NOTHROW(evaluate_bounds(100, std::nullopt, Rational(5, 4)));
}

}
