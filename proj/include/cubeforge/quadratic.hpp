#pragma once

#include <optional>
#include <string>

#include "cubeforge/checked.hpp"

namespace cubeforge {

using i128 = __int128;
using u128 = unsigned __int128;

u128 isqrt128(u128 x) noexcept;

// f(x) = a x^2 + b x + c with a > 0.
struct QuadraticForm {
  i64 a = 1;
  i64 b = 0;
  i64 c = 0;

  // Throws DomainError unless a > 0.
  void validate() const;

  // b^2 - 4ac, the constant in 4a f(x) + b^2 - 4ac = (2ax + b)^2.
  i128 shift() const { return i128{b} * b - i128{4} * a * c; }
  i128 value(i128 x) const;

  // "a,b,c"
  static QuadraticForm parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// Smallest x >= min_argument with f(x) = y, or nullopt. Decided through the
// discriminant 4a*y + b^2 - 4ac being a perfect square t^2 with
// 2a*x + b = ±t; no floating point is involved.
std::optional<u64> quadratic_membership(const QuadraticForm& f, i128 y, u64 min_argument = 1);

}  // namespace cubeforge
