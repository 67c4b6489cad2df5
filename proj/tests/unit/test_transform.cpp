#include "doctest.h"

#include <random>

#include "cubeforge/search.hpp"
#include "cubeforge/transform.hpp"
#include "support.hpp"

using namespace cubeforge;

namespace {

QuadraticForm random_form(std::mt19937_64& rng) {
  return QuadraticForm{static_cast<i64>(1 + rng() % 50), static_cast<i64>(rng() % 61) - 30,
                       static_cast<i64>(rng() % 61) - 30};
}

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("cube transform examples") {
  const QuadraticForm f{1, 2, 0};
  const HilbertCube t = transform_cube(HilbertCube(3, {5}), f);
  CHECK(t.base() == 16);
  CHECK(std::vector<u64>(t.generators().begin(), t.generators().end()) == std::vector<u64>{20});
  CHECK(expand_elements(t) == IntSet{16, 36});

  const HilbertCube worked = transform_cube(HilbertCube(1, {528, 840, 840}), QuadraticForm{1, 0, 0});
  CHECK(worked == HilbertCube(4, {2112, 3360, 3360}));
  for (u64 v : expand_elements(worked)) CHECK(testing::naive_is_square(v));
  CHECK(transformed_bound(QuadraticForm{1, 0, 0}, 2209) == 4 * 2209);
  CHECK(transformed_bound(f, 100) == 404);
}

TEST_CASE("AP transform examples") {
  CHECK(transform_ap(APWitness{3, 5, 4}, QuadraticForm{1, 2, 0}) == APWitness{16, 20, 4});
  CHECK(transform_ap(APWitness{1, 24, 3}, QuadraticForm{1, 0, 0}) == APWitness{4, 96, 3});
  CHECK(transform_ap(APWitness{7, 9, 5}, QuadraticForm{1, 0, 0}) == APWitness{28, 36, 5});
}

TEST_CASE("transform errors") {
  // 4*1*0 + 0 - 4*1*5 < 0.
  CHECK_THROWS_AS(transform_value(QuadraticForm{1, 0, 5}, 0), DomainError);
  CHECK_THROWS_AS(transform_value(QuadraticForm{1, 0, 0}, UINT64_MAX / 2), OverflowError);
  CHECK_THROWS_AS(transform_cube(HilbertCube(0, {1}), QuadraticForm{1, 0, 5}), DomainError);
}

TEST_CASE("no four-term AP in quadratic images") {
  CHECK_FALSE(check_no_4ap_in_quadratic_image(QuadraticForm{1, 0, 0}, 1000000).has_value());
  CHECK_FALSE(check_no_4ap_in_quadratic_image(QuadraticForm{1, 2, 0}, 100000).has_value());
  CHECK_FALSE(check_no_4ap_in_quadratic_image(QuadraticForm{2, 0, 0}, 10).has_value());
}

TEST_CASE("commutation with expansion") {
  std::mt19937_64 rng(testing::test_seed());
  for (int trial = 0; trial < 500; ++trial) {
    const QuadraticForm f = random_form(rng);
    const std::size_t d = rng() % 8;
    std::vector<u64> gens(d);
    for (u64& g : gens) g = 1 + rng() % 500;
    // A base large enough that b^2 - 4ac cannot push it below zero.
    const u64 base = 100 + rng() % 1000;
    const HilbertCube q(base, gens);
    std::set<u64> mapped;
    for (u64 v : testing::subset_sums(base, gens)) {
      mapped.insert(static_cast<u64>(4 * f.a * static_cast<i128>(v) + f.shift()));
    }
    CHECK(expand_elements(transform_cube(q, f)) == IntSet(mapped.begin(), mapped.end()));
  }
}

TEST_CASE("image values land in the squares") {
  std::mt19937_64 rng(testing::test_seed() + 1);
  for (int trial = 0; trial < 20; ++trial) {
    const QuadraticForm f = random_form(rng);
    for (u64 v = 1; v <= 10000; ++v) {
      if (!quadratic_membership(f, static_cast<i128>(v)).has_value()) continue;
      CHECK(is_square(transform_value(f, v)));
    }
  }
}

TEST_CASE("AP transport keeps length and spacing") {
  std::mt19937_64 rng(testing::test_seed() + 2);
  for (int trial = 0; trial < 500; ++trial) {
    const QuadraticForm f = random_form(rng);
    const APWitness ap{100 + rng() % 1000, 1 + rng() % 100, 1 + rng() % 10};
    const APWitness t = transform_ap(ap, f);
    CHECK(t.length == ap.length);
    for (u64 j = 0; j < ap.length; ++j) CHECK(t.term(j) == transform_value(f, ap.term(j)));
  }
}

TEST_CASE("a vertex at a positive integer maps to zero") {
  // f(x) = x^2 - 2x + 2 has its vertex at x = 1 with f(1) = 1, and 4a*1 + b^2 - 4ac = 0.
  const QuadraticForm f{1, -2, 2};
  const SetOracle image = SetOracle::quadratic(f);
  const HilbertCube q(1, {1});  // {f(1), f(2)} = {1, 2}
  REQUIRE(verify_cube(q, image, 10).ok);
  const HilbertCube t = transform_cube(q, f);
  CHECK(t == HilbertCube(0, {4}));
  const u64 bound = transformed_bound(f, 10);
  const CubeVerification strict = verify_cube(t, SetOracle::squares(), bound);
  CHECK_FALSE(strict.ok);
  CHECK(strict.offender == std::optional<u64>{0});
  CHECK(verify_cube(t, SetOracle::squares(), bound, true).ok);
}

}
