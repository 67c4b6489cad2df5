#include "cubeforge/cube.hpp"

#include <algorithm>
#include <sstream>

namespace cubeforge {

HilbertCube::HilbertCube(u64 base, std::vector<u64> generators, GeneratorPolicy policy)
    : base_(base), generators_(std::move(generators)) {
  top_ = base_;
  for (u64 g : generators_) {
    if (g == 0) {
      throw DomainError("cube generators must be positive");
    }
    top_ = checked_add(top_, g);
  }
  if (policy == GeneratorPolicy::Distinct) {
    std::vector<u64> sorted = generators_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw DomainError("repeated generator in a distinct-generator cube");
    }
  }
}

bool HilbertCube::is_canonical() const { return std::is_sorted(generators_.begin(), generators_.end()); }

HilbertCube HilbertCube::canonical() const {
  HilbertCube copy = *this;
  std::sort(copy.generators_.begin(), copy.generators_.end());
  return copy;
}

std::string HilbertCube::to_string() const {
  std::ostringstream out;
  out << "H(" << base_ << ';';
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    out << (i == 0 ? " " : ", ") << generators_[i];
  }
  out << ')';
  return out.str();
}

bool operator==(const HilbertCube& a, const HilbertCube& b) {
  if (a.base_ != b.base_ || a.generators_.size() != b.generators_.size()) return false;
  if (a.is_canonical() && b.is_canonical()) return a.generators_ == b.generators_;
  return a.canonical().generators_ == b.canonical().generators_;
}

bool report_order(const HilbertCube& a, const HilbertCube& b) {
  if (a.dimension() != b.dimension()) return a.dimension() > b.dimension();
  if (a.base_ != b.base_) return a.base_ < b.base_;
  const HilbertCube ca = a.canonical();
  const HilbertCube cb = b.canonical();
  return ca.generators_ < cb.generators_;
}

IntSet merge_shifted(std::span<const u64> layer, u64 shift) {
  IntSet out;
  if (layer.empty()) return out;
  checked_add(layer.back(), shift);
  out.reserve(layer.size() * 2);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < layer.size() || j < layer.size()) {
    u64 next;
    if (j == layer.size() || (i < layer.size() && layer[i] <= layer[j] + shift)) {
      next = layer[i++];
    } else {
      next = layer[j++] + shift;
    }
    if (out.empty() || out.back() != next) out.push_back(next);
  }
  return out;
}

CubeExpansion expand(const HilbertCube& cube) {
  CubeExpansion result;
  result.layers.reserve(cube.dimension() + 1);
  result.layers.push_back(IntSet{cube.base()});
  for (u64 g : cube.generators()) {
    result.layers.push_back(merge_shifted(result.layers.back(), g));
  }
  result.distinct_elements = result.layers.back();
  result.multiset_size = cube.dimension() >= 64 ? UINT64_MAX : (u64{1} << cube.dimension());
  return result;
}

IntSet expand_elements(const HilbertCube& cube) {
  IntSet layer{cube.base()};
  for (u64 g : cube.generators()) {
    layer = merge_shifted(layer, g);
  }
  return layer;
}

std::vector<Rational> layer_ratios(const HilbertCube& cube) {
  if (cube.dimension() == 0) {
    throw EmptyCubeError("layer ratios need at least one generator");
  }
  const CubeExpansion e = expand(cube);
  std::vector<Rational> ratios;
  for (std::size_t i = 1; i + 1 <= cube.dimension(); ++i) {
    ratios.emplace_back(static_cast<std::int64_t>(e.layers[i + 1].size()),
                        static_cast<std::int64_t>(e.layers[i].size()));
  }
  return ratios;
}

std::size_t max_multiplicity(const HilbertCube& cube) {
  std::vector<u64> sorted(cube.generators().begin(), cube.generators().end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t best = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    best = std::max(best, j - i);
    i = j;
  }
  return best;
}

}  // namespace cubeforge
