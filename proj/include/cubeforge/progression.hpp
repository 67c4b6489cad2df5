#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "cubeforge/cube.hpp"
#include "cubeforge/rational.hpp"

namespace cubeforge {

// start, start + difference, ..., start + (length - 1) * difference.
struct APWitness {
  u64 start = 0;
  u64 difference = 1;
  u64 length = 1;

  u64 term(u64 j) const { return start + j * difference; }
  u64 last() const { return term(length - 1); }
  IntSet elements() const;
  // Every term lies in the sorted set `host`.
  bool lies_in(std::span<const u64> host) const;

  // Validating constructor: throws DomainError unless length >= 1, difference >= 1
  // and every term lies in `host`.
  static APWitness checked(std::span<const u64> host, u64 start, u64 difference, u64 length);

  friend bool operator==(const APWitness&, const APWitness&) = default;
};

// Thrown by extract_ap_from_overlap when |B ∩ (B+h)| <= (1 - alpha)|B|.
class OverlapTooSmallError : public DomainError {
 public:
  OverlapTooSmallError(std::size_t overlap, std::size_t set_size, const Rational& alpha);
  std::size_t overlap() const { return overlap_; }
  std::size_t set_size() const { return set_size_; }

 private:
  std::size_t overlap_;
  std::size_t set_size_;
};

// |B ∩ (B + h)|, i.e. the number of b in B with b + h in B.
std::size_t shift_overlap(std::span<const u64> set, u64 h);

// Shift-overlap extraction. Given |B ∩ (B+h)| > (1 - alpha)|B| with alpha in
// (0, 1), computes the run length r(b) of b, b+h, b+2h, ... inside B for every
// b and returns a longest run (smallest start on ties). The run is guaranteed
// to have at least floor(1/alpha) + 1 terms.
APWitness extract_ap_from_overlap(std::span<const u64> set, u64 h, const Rational& alpha);

// Longest AP with difference exactly h inside B; smallest start on ties.
APWitness longest_ap_with_difference(std::span<const u64> set, u64 h);

// Longest AP over all differences, seeded by every pair. Ties go to the
// smallest start, then the smallest difference. A singleton yields (x, 1, 1).
APWitness longest_ap(std::span<const u64> set);

struct SquareApScan {
  u64 max_n = 0;
  // A 4-term AP of squares in [1, max_n]; its existence would contradict
  // Fermat's theorem on four squares.
  std::optional<APWitness> four_term;
  // 3-term APs of positive squares <= max_n, as evidence the scan is not vacuous.
  u64 three_term_count = 0;
  std::optional<APWitness> first_three_term;
  u64 pairs_checked = 0;
};

// Iterates square pairs x^2 < y^2 <= max_n as the first two terms and checks
// both continuations. Outer loop split over `threads` workers; the merged
// result does not depend on the thread count.
SquareApScan scan_squares_4ap(u64 max_n, unsigned threads = 1);

}  // namespace cubeforge
