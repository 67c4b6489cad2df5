#include "cubeforge/quadratic.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace cubeforge {

u128 isqrt128(u128 x) noexcept {
  if (x <= UINT64_MAX) return isqrt(static_cast<u64>(x));
  // Decreasing Newton iteration from 2^64 >= sqrt(x); stops at floor(sqrt(x)).
  u128 r = u128{1} << 64;
  u128 next = (r + x / r) / 2;
  while (next < r) {
    r = next;
    next = (r + x / r) / 2;
  }
  return r;
}

void QuadraticForm::validate() const {
  if (a <= 0) {
    throw DomainError("quadratic form needs a > 0, got a = " + std::to_string(a));
  }
}

i128 QuadraticForm::value(i128 x) const {
  i128 ax2;
  i128 bx;
  i128 out;
  if (__builtin_mul_overflow(x, x, &ax2) || __builtin_mul_overflow(ax2, i128{a}, &ax2) ||
      __builtin_mul_overflow(x, i128{b}, &bx) || __builtin_add_overflow(ax2, bx, &out) ||
      __builtin_add_overflow(out, i128{c}, &out)) {
    throw OverflowError("quadratic form value overflows 128 bits");
  }
  return out;
}

QuadraticForm QuadraticForm::parse(const std::string& text) {
  std::vector<i64> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    i64 v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
      throw DomainError("malformed quadratic form '" + text + "' (expected a,b,c)");
    }
    parts.push_back(v);
    pos = comma + 1;
  }
  if (parts.size() != 3) {
    throw DomainError("malformed quadratic form '" + text + "' (expected a,b,c)");
  }
  QuadraticForm f{parts[0], parts[1], parts[2]};
  f.validate();
  return f;
}

std::string QuadraticForm::to_string() const {
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

std::optional<u64> quadratic_membership(const QuadraticForm& f, i128 y, u64 min_argument) {
  f.validate();
  i128 disc;
  if (__builtin_mul_overflow(i128{4} * f.a, y, &disc) || __builtin_add_overflow(disc, f.shift(), &disc)) {
    throw OverflowError("discriminant overflows 128 bits");
  }
  if (disc < 0) return std::nullopt;
  const i128 t = static_cast<i128>(isqrt128(static_cast<u128>(disc)));
  if (t * t != disc) return std::nullopt;

  const i128 two_a = i128{2} * f.a;
  std::optional<u64> best;
  for (const i128 root : {t - f.b, -t - f.b}) {
    if (root % two_a != 0) continue;
    const i128 x = root / two_a;
    if (x < static_cast<i128>(min_argument) || x > static_cast<i128>(UINT64_MAX)) continue;
    const u64 candidate = static_cast<u64>(x);
    if (!best || candidate < *best) best = candidate;
  }
  return best;
}

}  // namespace cubeforge
