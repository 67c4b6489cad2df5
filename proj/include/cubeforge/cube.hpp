#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cubeforge/checked.hpp"
#include "cubeforge/rational.hpp"

namespace cubeforge {

// Sorted, duplicate-free list of non-negative integers.
using IntSet = std::vector<u64>;

enum class GeneratorPolicy { Multiset, Distinct };

// H(a0; a1, ..., ad) = { a0 + sum eps_i a_i : eps in {0,1}^d }.
//
// Generators are kept in the order they were supplied: the layer sequence
// H_0 ⊆ H_1 ⊆ ... ⊆ H_d depends on that order even though the expanded set
// does not. Identity (==, hashing, reports) always goes through the
// canonical form, which sorts the generators non-decreasing.
class HilbertCube {
 public:
  HilbertCube() = default;
  // Throws DomainError for a zero generator, or for a repeated generator
  // under GeneratorPolicy::Distinct, and OverflowError when a0 + sum a_i
  // leaves the u64 range.
  HilbertCube(u64 base, std::vector<u64> generators, GeneratorPolicy policy = GeneratorPolicy::Multiset);

  u64 base() const { return base_; }
  std::span<const u64> generators() const { return generators_; }
  std::size_t dimension() const { return generators_.size(); }
  // a0 + sum a_i, the largest element of the cube.
  u64 top() const { return top_; }

  bool is_canonical() const;
  HilbertCube canonical() const;

  std::string to_string() const;

  friend bool operator==(const HilbertCube& a, const HilbertCube& b);
  // Orders canonical forms by (dimension desc, base asc, generators lex).
  friend bool report_order(const HilbertCube& a, const HilbertCube& b);

 private:
  u64 base_ = 0;
  std::vector<u64> generators_;
  u64 top_ = 0;
};

struct CubeExpansion {
  IntSet distinct_elements;
  // 2^d; the count of the multiset of subset sums. Saturates at UINT64_MAX for d >= 64.
  u64 multiset_size = 1;
  // layers[i] = H_i, so layers.size() == d + 1 and layers.back() == distinct_elements.
  std::vector<IntSet> layers;
};

CubeExpansion expand(const HilbertCube& cube);

// Only the final set, without keeping intermediate layers.
IntSet expand_elements(const HilbertCube& cube);

// |H_{i+1}| / |H_i| for i = 1..d-1. Throws EmptyCubeError when d = 0.
std::vector<Rational> layer_ratios(const HilbertCube& cube);

std::size_t max_multiplicity(const HilbertCube& cube);

bool report_order(const HilbertCube& a, const HilbertCube& b);

// Sorted merge of `layer` and `layer + shift`, deduplicated.
IntSet merge_shifted(std::span<const u64> layer, u64 shift);

}  // namespace cubeforge
