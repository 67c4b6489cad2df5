#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "cubeforge/cube.hpp"
#include "cubeforge/progression.hpp"
#include "cubeforge/rational.hpp"
#include "cubeforge/set_oracle.hpp"

namespace cubeforge {

struct GrowthCertified {
  // 2c^(d-1); 1 for d = 0.
  Rational bound;
  friend bool operator==(const GrowthCertified&, const GrowthCertified&) = default;
};

struct GrowthViolation {
  // Smallest i in 1..d-1 with |H_{i+1}| / |H_i| < c.
  std::size_t layer = 0;
  // AP of difference a_{i+1} inside H_i with at least k terms.
  APWitness ap;
  friend bool operator==(const GrowthViolation&, const GrowthViolation&) = default;
};

struct GrowthCertificate {
  std::vector<u64> layer_sizes;
  Rational c;
  unsigned k = 3;
  std::variant<GrowthCertified, GrowthViolation> verdict;

  bool certified() const { return std::holds_alternative<GrowthCertified>(verdict); }
  friend bool operator==(const GrowthCertificate&, const GrowthCertificate&) = default;
};

// Throws DomainError unless k >= 3 and 1 < c <= k/(k-1).
void validate_growth_parameters(unsigned k, const Rational& c);

// Either certifies |H| >= 2c^(d-1) from the layer ratios, or turns the first
// ratio below c into a k-term AP inside that layer. The latter is what a
// k-AP-free host rules out.
GrowthCertificate certify_growth(const HilbertCube& cube, unsigned k, const Rational& c);

// Whether the oracle restricted to [0, up_to] contains no 3-term AP. Decided
// by brute force unless the oracle is a greedy k = 3 fixture.
bool oracle_is_3ap_free(const SetOracle& oracle, u64 up_to);

// |H| == 2^d for a cube inside a 3-AP-free host. Throws ContainmentError if
// the cube is not inside the oracle, or if the oracle has a 3-term AP below
// the cube's top element.
bool verify_power_growth_3apfree(const HilbertCube& cube, const SetOracle& oracle);

}  // namespace cubeforge
