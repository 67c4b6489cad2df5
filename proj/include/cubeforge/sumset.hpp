#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cubeforge/cube.hpp"
#include "cubeforge/set_oracle.hpp"

namespace cubeforge {

// {c + d : c in C, d in D}, sorted and deduplicated. OverflowError on wrap.
IntSet sumset(std::span<const u64> lhs, std::span<const u64> rhs);

// C = H(a0; a_1..a_floor(d/2)), D = H(0; a_ceil((d+1)/2)..a_d), so C + D = H.
// For d = 1, C = H(a0; a1) and D = {0}.
struct CubeSplit {
  IntSet C;
  IntSet D;
  u64 n = 0;
  std::size_t min_size() const { return std::min(C.size(), D.size()); }
};

// Throws EmptyCubeError for d = 0. `n` defaults to the cube's top element.
// Throws std::logic_error if C + D differs from the expansion.
CubeSplit split_cube(const HilbertCube& cube, u64 n = 0);

struct GyarmatiReport {
  // C + D lies inside the squares.
  bool contained = false;
  // C, D ⊆ [0, n] and C + D ⊆ [1, n]. 0 ∈ D is admitted because split_cube
  // produces it.
  bool within_window = false;
  std::size_t min_size = 0;
  double bound_ln = 0;    // 8 ln n
  double bound_log2 = 0;  // 8 log2 n, printed for comparison only
  bool satisfied = false; // min_size <= 8 ln n
};

// Measures min(|C|, |D|) against 8 ln n; never asserts anything.
GyarmatiReport gyarmati_check(std::span<const u64> C, std::span<const u64> D, u64 n);

// Largest D ⊆ [0, n] with C + D inside the oracle:
// the intersection over c in C of (S - c) ∩ [0, n], computed on sieves.
IntSet max_d_for_c(std::span<const u64> C, const SetOracle& oracle, u64 n);

// 3 n^(1 - 1/(k-1)).
double crs_reference_bound(unsigned k, u64 n);

struct SweepRow {
  IntSet c_elements;
  std::size_t d_size = 0;
  u64 n = 0;
  double bound_ln = 0;
  bool satisfied = false;
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

// For every two-element C = {c1 < c2} ⊆ [0, c_max], D = max_d_for_c(C, oracle, n)
// and compares min(|C|, |D|) with 8 ln n. Rows come back in lexicographic C
// order regardless of `threads`.
std::vector<SweepRow> gyarmati_sweep(const SetOracle& oracle, u64 c_max, u64 n, unsigned threads = 1);

}  // namespace cubeforge
