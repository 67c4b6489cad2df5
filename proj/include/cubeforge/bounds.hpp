#pragma once

#include <map>
#include <optional>
#include <string>

#include "cubeforge/checked.hpp"
#include "cubeforge/rational.hpp"

namespace cubeforge {

// Every closed-form bound on cube dimension, natural logarithm throughout.
//
//   theorem1       7 ln ln N                     (squares, distinct generators)
//   theorem1_sharp (2 / ln c) ln ln N            (c < 4/3; the supremum 4/3 when c is absent or too large)
//   multiset       21 ln ln N                    (squares, repeated generators)
//   gyarmati       8 ln N                        (min(|C|, |D|) when C + D is inside the squares)
//   theorem3       2(k-2) / ((k-1) ln c) ln N    (k-AP-free hosts, needs k and c)
//   crs            3 N^(1 - 1/(k-1))             (min(|C|, |D|) in k-AP-free hosts, needs k)
//
// The ln ln N and ln N entries are only reported for N >= 16.
struct BoundReport {
  u64 n = 0;
  std::optional<unsigned> k;
  std::optional<Rational> c;
  // The growth constant used for theorem1_sharp.
  Rational c_squares{4, 3};
  std::map<std::string, double> values;
  // 2 / ln(c_squares); below 6.96 whenever c_squares is close enough to 4/3.
  double sharp_constant = 0;
  // (6.96 - sharp_constant) ln ln N: how much room the O(1) term has left.
  std::optional<double> sharp_slack;
  // N < 10^6, where our own slack accounting has not been exercised.
  bool below_validated_regime = false;
  std::string log_convention = "natural";
};

// Throws DomainError for n == 0, k < 3, or c outside (1, k/(k-1)].
BoundReport evaluate_bounds(u64 n, std::optional<unsigned> k = std::nullopt,
                            std::optional<Rational> c = std::nullopt);

}  // namespace cubeforge
