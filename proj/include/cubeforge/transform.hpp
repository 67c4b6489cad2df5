#pragma once

#include <optional>

#include "cubeforge/cube.hpp"
#include "cubeforge/progression.hpp"
#include "cubeforge/quadratic.hpp"

namespace cubeforge {

// v -> 4a*v + b^2 - 4ac maps f(x) to (2ax + b)^2, so quadratic images land in
// the squares. DomainError if the result is negative, OverflowError past u64.
u64 transform_value(const QuadraticForm& f, u64 v);

// 4a*N + b^2 - 4ac, the window the transformed cube lives in.
u64 transformed_bound(const QuadraticForm& f, u64 n);

// H(4a*a0 + b^2 - 4ac; 4a*a1, ..., 4a*ad). Generator order is preserved.
HilbertCube transform_cube(const HilbertCube& cube, const QuadraticForm& f);

// (4a*start + b^2 - 4ac, 4a*difference, length).
APWitness transform_ap(const APWitness& ap, const QuadraticForm& f);

struct QuadraticFourAp {
  APWitness in_image;
  APWitness in_squares;
  // Whether every term of in_squares passed is_square.
  bool squares_confirmed = false;
};

// Scans every 4-term AP inside {f(x) : x >= min_argument} ∩ [1, n] and maps
// the first one found (smallest start, then difference) into the squares.
// A hit would contradict Fermat's four-squares theorem.
std::optional<QuadraticFourAp> check_no_4ap_in_quadratic_image(const QuadraticForm& f, u64 n, u64 min_argument = 1);

}  // namespace cubeforge
