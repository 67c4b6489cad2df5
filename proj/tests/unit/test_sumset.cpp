#include "doctest.h"

#include <cmath>
#include <random>

#include "cubeforge/sumset.hpp"
#include "support.hpp"

using namespace cubeforge;

namespace {

IntSet pairwise_sums(const IntSet& c, const IntSet& d) {
  std::set<u64> out;
  for (u64 x : c)
    for (u64 y : d) out.insert(x + y);
  return IntSet(out.begin(), out.end());
}

}  // namespace

TEST_SUITE("sumset") {

TEST_CASE("sumset examples") {
  CHECK(sumset(IntSet{1, 841}, IntSet{0, 528, 840, 1368}) == IntSet{1, 529, 841, 1369, 1681, 2209});
  CHECK(sumset(IntSet{0}, IntSet{1, 4, 9}) == IntSet{1, 4, 9});
  CHECK(sumset(IntSet{1, 25}, IntSet{0, 24}) == IntSet{1, 25, 49});
  CHECK(sumset(IntSet{}, IntSet{1, 2}).empty());
  CHECK_THROWS_AS(sumset(IntSet{UINT64_MAX}, IntSet{1}), OverflowError);
}

TEST_CASE("sumset agrees with the pairwise loop") {
  std::mt19937_64 rng(testing::test_seed());
  for (int trial = 0; trial < 300; ++trial) {
    std::set<u64> a, b;
    const std::size_t na = rng() % 30, nb = rng() % 30;
    while (a.size() < na) a.insert(rng() % 500);
    while (b.size() < nb) b.insert(rng() % 500);
    const IntSet c(a.begin(), a.end()), d(b.begin(), b.end());
    CHECK(sumset(c, d) == pairwise_sums(c, d));
    CHECK(sumset(c, IntSet{0}) == c);
    CHECK(sumset(IntSet{0}, d) == d);
  }
}

TEST_CASE("split examples") {
  const CubeSplit worked = split_cube(HilbertCube(1, {528, 840, 840}));
  CHECK(worked.C == IntSet{1, 529});
  CHECK(worked.D == IntSet{0, 840, 1680});
  CHECK(worked.min_size() == 2);
  CHECK(worked.n == 2209);

  const CubeSplit one = split_cube(HilbertCube(9, {7}));
  CHECK(one.C == IntSet{9, 16});
  CHECK(one.D == IntSet{0});
  CHECK(one.min_size() == 1);

  const CubeSplit four = split_cube(HilbertCube(0, {1, 3, 9, 27}));
  CHECK(four.C == IntSet{0, 1, 3, 4});
  CHECK(four.D == IntSet{0, 9, 27, 36});
  CHECK(four.min_size() == 4);

  CHECK_THROWS_AS(split_cube(HilbertCube(4, {})), EmptyCubeError);
}

TEST_CASE("split round trip on random cubes") {
  std::mt19937_64 rng(testing::test_seed() + 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 1 + rng() % 10;
    std::vector<u64> gens(d);
    for (u64& g : gens) g = 1 + rng() % 1000;
    const u64 base = rng() % 1000;
    const CubeSplit s = split_cube(HilbertCube(base, gens));
    CHECK(pairwise_sums(s.C, s.D) == testing::subset_sums(base, gens));
  }
}

TEST_CASE("gyarmati check examples") {
  const GyarmatiReport worked = gyarmati_check(IntSet{1, 841}, IntSet{0, 528, 840, 1368}, 2209);
  CHECK(worked.contained);
  CHECK(worked.within_window);
  CHECK(worked.min_size == 2);
  CHECK(worked.bound_ln == doctest::Approx(61.6023616273609374).epsilon(1e-12));
  CHECK(worked.bound_log2 == doctest::Approx(8.0 * std::log2(2209.0)));
  CHECK(worked.satisfied);

  const GyarmatiReport small = gyarmati_check(IntSet{0, 24}, IntSet{1, 25}, 49);
  CHECK(small.contained);
  CHECK(small.min_size == 2);
  CHECK(small.bound_ln == doctest::Approx(31.1345623848850129).epsilon(1e-12));
  CHECK(small.satisfied);

  CHECK_FALSE(gyarmati_check(IntSet{2}, IntSet{1}, 10).contained);
  CHECK_FALSE(gyarmati_check(IntSet{1}, IntSet{0, 24}, 10).within_window);
}

TEST_CASE("largest D for a given C") {
  const SetOracle squares = SetOracle::squares();
  CHECK(max_d_for_c(IntSet{0, 24}, squares, 30) == IntSet{1, 25});
  CHECK(max_d_for_c(IntSet{0}, squares, 10) == IntSet{0, 1, 4, 9});
  const IntSet big = max_d_for_c(IntSet{1, 841}, squares, 1500);
  for (u64 x : {0u, 528u, 840u, 1368u}) CHECK(std::binary_search(big.begin(), big.end(), x));
}

TEST_CASE("largest D is maximal and correct") {
  std::mt19937_64 rng(testing::test_seed() + 4);
  const SetOracle squares = SetOracle::squares();
  for (int trial = 0; trial < 40; ++trial) {
    std::set<u64> cs;
    const std::size_t nc = 1 + rng() % 3;
    while (cs.size() < nc) cs.insert(rng() % 200);
    const IntSet c(cs.begin(), cs.end());
    const u64 n = 100 + rng() % 3000;
    const IntSet d = max_d_for_c(c, squares, n);
    IntSet expected;
    for (u64 x = 0; x <= n; ++x) {
      bool all = true;
      for (u64 y : c) all = all && testing::naive_is_square(x + y);
      if (all) expected.push_back(x);
    }
    CHECK(d == expected);
  }
}

TEST_CASE("CRS reference values") {
  CHECK(crs_reference_bound(3, 10000) == doctest::Approx(300.0).epsilon(1e-12));
  CHECK(crs_reference_bound(3, 1) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(crs_reference_bound(4, 1000000) == doctest::Approx(30000.0).epsilon(1e-12));
}

TEST_CASE("small sweep is ordered and thread independent") {
  const SetOracle squares = SetOracle::squares();
  const auto one = gyarmati_sweep(squares, 20, 5000, 1);
  const auto three = gyarmati_sweep(squares, 20, 5000, 3);
  CHECK(one == three);
  REQUIRE(one.size() == 21 * 20 / 2);
  CHECK(one.front().c_elements == IntSet{0, 1});
  CHECK(one.back().c_elements == IntSet{19, 20});
  for (const SweepRow& row : one) {
    CHECK(row.d_size == max_d_for_c(row.c_elements, squares, 5000).size());
    CHECK(row.satisfied);
  }
}

}
