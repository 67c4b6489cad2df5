#pragma once

#include <cstdint>
#include <string>

#include "cubeforge/errors.hpp"

namespace cubeforge {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("u64 overflow: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

inline u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("u64 overflow: " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

// Narrow a signed 128-bit intermediate to u64, rejecting negatives and overflow.
inline u64 narrow_to_u64(__int128 v, const char* what) {
  if (v < 0) {
    throw DomainError(std::string(what) + " is negative");
  }
  if (v > static_cast<__int128>(UINT64_MAX)) {
    throw OverflowError(std::string(what) + " exceeds the u64 range");
  }
  return static_cast<u64>(v);
}

// floor(sqrt(x)), exact for the whole u64 range.
u64 isqrt(u64 x) noexcept;

// x = y*y for some integer y >= 0.
bool is_square(u64 x) noexcept;

}  // namespace cubeforge
