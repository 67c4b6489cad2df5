#include "cubeforge/transform.hpp"

#include <algorithm>

#include "cubeforge/set_oracle.hpp"

namespace cubeforge {

namespace {

u64 scale(const QuadraticForm& f, u64 v) {
  f.validate();
  return checked_mul(checked_mul(4, static_cast<u64>(f.a)), v);
}

}  // namespace

u64 transform_value(const QuadraticForm& f, u64 v) {
  const i128 scaled = static_cast<i128>(scale(f, v));
  return narrow_to_u64(scaled + f.shift(), "transformed value 4a*v + b^2 - 4ac");
}

u64 transformed_bound(const QuadraticForm& f, u64 n) { return transform_value(f, n); }

HilbertCube transform_cube(const HilbertCube& cube, const QuadraticForm& f) {
  std::vector<u64> gens;
  gens.reserve(cube.dimension());
  for (u64 g : cube.generators()) gens.push_back(scale(f, g));
  return HilbertCube(transform_value(f, cube.base()), std::move(gens));
}

APWitness transform_ap(const APWitness& ap, const QuadraticForm& f) {
  return APWitness{transform_value(f, ap.start), scale(f, ap.difference), ap.length};
}

std::optional<QuadraticFourAp> check_no_4ap_in_quadratic_image(const QuadraticForm& f, u64 n, u64 min_argument) {
  if (n == 0) throw DomainError("4-AP scan needs n >= 1");
  const IntSet image = SetOracle::quadratic(f, min_argument).enumerate(n);
  auto in_image = [&](u64 v) { return std::binary_search(image.begin(), image.end(), v); };

  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      const u64 diff = image[j] - image[i];
      if (image[j] > n - diff) break;  // third term already out of the window
      const u64 third = image[j] + diff;
      if (third > n - diff || !in_image(third) || !in_image(third + diff)) continue;

      QuadraticFourAp hit;
      hit.in_image = APWitness{image[i], diff, 4};
      hit.in_squares = transform_ap(hit.in_image, f);
      hit.squares_confirmed = true;
      for (u64 t = 0; t < 4; ++t) hit.squares_confirmed = hit.squares_confirmed && is_square(hit.in_squares.term(t));
      return hit;
    }
  }
  return std::nullopt;
}

}  // namespace cubeforge
