#include "cubeforge/bounds.hpp"

#include <cmath>

#include "cubeforge/growth.hpp"
#include "cubeforge/sumset.hpp"

namespace cubeforge {

BoundReport evaluate_bounds(u64 n, std::optional<unsigned> k, std::optional<Rational> c) {
  if (n == 0) throw DomainError("bounds need N >= 1");
  const Rational four_thirds(4, 3);
  if (k) {
    if (c) {
      validate_growth_parameters(*k, *c);
    } else if (*k < 3) {
      throw DomainError("bounds need k >= 3");
    }
  } else if (c && !(Rational(1) < *c && *c < four_thirds)) {
    throw DomainError("without k, c is the squares growth constant and must lie in (1, 4/3)");
  }

  BoundReport r;
  r.n = n;
  r.k = k;
  r.c = c;
  r.c_squares = (c && *c < four_thirds) ? *c : four_thirds;
  r.sharp_constant = 2.0 / std::log(r.c_squares.to_double());
  r.below_validated_regime = n < 1000000;

  const double big_n = static_cast<double>(n);
  if (k) r.values["crs"] = crs_reference_bound(*k, n);
  if (n >= 16) {
    const double ln_n = std::log(big_n);
    const double lnln_n = std::log(ln_n);
    r.values["theorem1"] = 7.0 * lnln_n;
    r.values["theorem1_sharp"] = r.sharp_constant * lnln_n;
    r.values["multiset"] = 21.0 * lnln_n;
    r.values["gyarmati"] = 8.0 * ln_n;
    r.sharp_slack = (6.96 - r.sharp_constant) * lnln_n;
    if (k && c) {
      const double kk = static_cast<double>(*k);
      r.values["theorem3"] = 2.0 * (kk - 2.0) / ((kk - 1.0) * std::log(c->to_double())) * ln_n;
    }
  }
  return r;
}

}  // namespace cubeforge
