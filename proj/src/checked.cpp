#include "cubeforge/checked.hpp"

#include <cmath>

namespace cubeforge {

u64 isqrt(u64 x) noexcept {
  // The double seed can be off by a few units near 2^64; correct it with
  // exact integer comparisons. t <= 2^32 - 1 keeps t*t inside u64.
  constexpr u64 kMaxRoot = 0xFFFFFFFFull;
  u64 t = static_cast<u64>(std::sqrt(static_cast<double>(x)));
  if (t > kMaxRoot) t = kMaxRoot;
  while (t * t > x) --t;
  while (t < kMaxRoot && (t + 1) * (t + 1) <= x) ++t;
  return t;
}

bool is_square(u64 x) noexcept {
  // Squares mod 64 occupy 12 residues; reject the rest without a root.
  constexpr u64 kSquareResidues = 0x0202021202030213ull;
  if (((kSquareResidues >> (x & 63)) & 1) == 0) return false;
  const u64 t = isqrt(x);
  return t * t == x;
}

}  // namespace cubeforge
