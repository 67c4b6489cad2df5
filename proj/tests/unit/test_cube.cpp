#include "doctest.h"

#include <algorithm>
#include <random>

#include "cubeforge/cube.hpp"
#include "support.hpp"

using namespace cubeforge;

TEST_SUITE("cube_core") {

TEST_CASE("expand reproduces the worked example of squares") {
  const HilbertCube cube(1, {528, 840, 840});
  const CubeExpansion e = expand(cube);
  CHECK(e.distinct_elements == IntSet{1, 529, 841, 1369, 1681, 2209});
  CHECK(e.distinct_elements == IntSet{1 * 1, 23 * 23, 29 * 29, 37 * 37, 41 * 41, 47 * 47});
  CHECK(e.multiset_size == 8);
  CHECK(e.layers.size() == 4);
  CHECK(e.layers[0] == IntSet{1});
}

TEST_CASE("expand of a zero-dimensional cube is a singleton") {
  const CubeExpansion e = expand(HilbertCube(5, {}));
  CHECK(e.distinct_elements == IntSet{5});
  CHECK(e.multiset_size == 1);
}

TEST_CASE("expand matches direct subset-sum enumeration") {
  const HilbertCube cube(0, {1, 3, 9});
  CHECK(expand(cube).distinct_elements == testing::subset_sums(0, {1, 3, 9}));
  CHECK(expand(cube).distinct_elements == IntSet{0, 1, 3, 4, 9, 10, 12, 13});
}

TEST_CASE("construction rejects bad generators and overflow") {
  CHECK_THROWS_AS(HilbertCube(0, {0}), DomainError);
  CHECK_THROWS_AS(HilbertCube(0, {3, 3}, GeneratorPolicy::Distinct), DomainError);
  CHECK_NOTHROW(HilbertCube(0, {3, 3}, GeneratorPolicy::Multiset));
  CHECK_THROWS_AS(HilbertCube(UINT64_MAX - 5, {3, 3}), OverflowError);
  CHECK_NOTHROW(HilbertCube(UINT64_MAX - 6, {3, 3}));
}

TEST_CASE("layer ratios follow the supplied generator order") {
  // Layers {0,2} -> {0,1,2,3} -> {0,1,2,3,4}.
  CHECK(layer_ratios(HilbertCube(0, {2, 1, 1})) == std::vector<Rational>{Rational(2), Rational(5, 4)});
  CHECK(layer_ratios(HilbertCube(0, {1, 3, 9})) == std::vector<Rational>{Rational(2), Rational(2)});
  CHECK(layer_ratios(HilbertCube(7, {1})).empty());
  CHECK_THROWS_AS(layer_ratios(HilbertCube(7, {})), EmptyCubeError);
}

TEST_CASE("max multiplicity") {
  CHECK(max_multiplicity(HilbertCube(1, {528, 840, 840})) == 2);
  CHECK(max_multiplicity(HilbertCube(0, {1, 3, 9})) == 1);
  CHECK(max_multiplicity(HilbertCube(0, {})) == 0);
}

TEST_CASE("identity is the canonical form") {
  const HilbertCube a(1, {840, 840, 528});
  const HilbertCube b(1, {528, 840, 840});
  CHECK(a == b);
  CHECK_FALSE(a.is_canonical());
  CHECK(a.canonical().is_canonical());
  CHECK(a.to_string() == "H(1; 840, 840, 528)");
  CHECK_FALSE(HilbertCube(2, {528, 840, 840}) == b);
}

TEST_CASE("properties over random cubes") {
  std::mt19937_64 rng(testing::test_seed());
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = rng() % 13;
    std::vector<u64> gens(d);
    for (u64& g : gens) g = 1 + rng() % 50;
    const u64 base = rng() % 100;
    const HilbertCube cube(base, gens);
    const CubeExpansion e = expand(cube);

    // Matches direct enumeration, so |H_d| == 2^d exactly when sums are distinct.
    const IntSet direct = testing::subset_sums(base, gens);
    REQUIRE(e.distinct_elements == direct);
    CHECK(e.distinct_elements.size() <= e.multiset_size);
    CHECK(e.distinct_elements.front() == base);
    CHECK(e.distinct_elements.back() == cube.top());

    for (std::size_t i = 1; i < e.layers.size(); ++i) {
      CHECK(std::includes(e.layers[i].begin(), e.layers[i].end(), e.layers[i - 1].begin(), e.layers[i - 1].end()));
      CHECK(e.layers[i].size() <= 2 * e.layers[i - 1].size());
      CHECK(e.layers[i].size() >= e.layers[i - 1].size());
    }

    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(expand(HilbertCube(base, gens)).distinct_elements == e.distinct_elements);
  }
}

}
