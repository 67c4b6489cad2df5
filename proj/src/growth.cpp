#include "cubeforge/growth.hpp"

#include <stdexcept>

namespace cubeforge {

void validate_growth_parameters(unsigned k, const Rational& c) {
  if (k < 3) {
    throw DomainError("growth certificate needs k >= 3, got " + std::to_string(k));
  }
  const Rational upper(static_cast<std::int64_t>(k), static_cast<std::int64_t>(k - 1));
  // The endpoint k/(k-1) is admitted: floor(1/(c-1)) + 1 >= k still holds there.
  if (!(Rational(1) < c && c <= upper)) {
    throw DomainError("growth constant c = " + c.to_string() + " outside (1, " + upper.to_string() + "]");
  }
}

GrowthCertificate certify_growth(const HilbertCube& cube, unsigned k, const Rational& c) {
  validate_growth_parameters(k, c);
  const CubeExpansion e = expand(cube);
  const std::size_t d = cube.dimension();

  GrowthCertificate cert;
  cert.c = c;
  cert.k = k;
  for (const IntSet& layer : e.layers) cert.layer_sizes.push_back(layer.size());

  if (d == 0) {
    cert.verdict = GrowthCertified{Rational(1)};
    return cert;
  }

  for (std::size_t i = 1; i + 1 <= d; ++i) {
    const Rational ratio(static_cast<std::int64_t>(e.layers[i + 1].size()), static_cast<std::int64_t>(e.layers[i].size()));
    if (ratio >= c) continue;

    const IntSet& layer = e.layers[i];
    const u64 h = cube.generators()[i];  // a_{i+1}
    // |H_{i+1}| = 2|H_i| - overlap < c|H_i| forces overlap > (2 - c)|H_i|,
    // which is the extraction precondition for alpha = c - 1.
    const APWitness ap = extract_ap_from_overlap(layer, h, c - Rational(1));
    if (ap.length < k || !ap.lies_in(layer)) {
      throw std::logic_error("growth violation produced an AP shorter than k");
    }
    cert.verdict = GrowthViolation{i, ap};
    return cert;
  }

  const Rational bound = Rational(2) * c.pow(static_cast<unsigned>(d - 1));
  if (Rational(static_cast<std::int64_t>(e.distinct_elements.size())) < bound) {
    throw std::logic_error("all layer ratios >= c yet |H| < 2c^(d-1)");
  }
  cert.verdict = GrowthCertified{bound};
  return cert;
}

bool oracle_is_3ap_free(const SetOracle& oracle, u64 up_to) {
  if (oracle.kind() == OracleKind::GreedyApFree && oracle.ap_k() == 3) return true;
  const IntSet elements = oracle.elements_upto(up_to);
  if (elements.empty()) return true;
  return longest_ap(elements).length < 3;
}

bool verify_power_growth_3apfree(const HilbertCube& cube, const SetOracle& oracle) {
  const IntSet h = expand_elements(cube);
  for (u64 x : h) {
    if (!oracle.contains(x)) {
      throw ContainmentError(cube.to_string() + " is not contained in " + oracle.describe() + " (missing " +
                             std::to_string(x) + ")");
    }
  }
  if (!oracle_is_3ap_free(oracle, cube.top())) {
    throw ContainmentError(oracle.describe() + " contains a 3-term AP below " + std::to_string(cube.top()) +
                           ", so it is not a 3-AP-free host");
  }
  const std::size_t d = cube.dimension();
  return d < 64 && h.size() == (std::size_t{1} << d);
}

}  // namespace cubeforge
