#include "cubeforge/sumset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace cubeforge {

namespace {

// D over [0, n] from a host sieve covering [0, n + max(C)].
Sieve intersect_shifts(std::span<const u64> C, const Sieve& host, u64 n) {
  Sieve acc(n);
  acc.fill();
  for (u64 c : C) acc.and_shifted(host, c);
  return acc;
}

}  // namespace

IntSet sumset(std::span<const u64> lhs, std::span<const u64> rhs) {
  IntSet out;
  if (lhs.empty() || rhs.empty()) return out;
  checked_add(lhs.back(), rhs.back());
  out.reserve(lhs.size() * rhs.size());
  for (u64 a : lhs) {
    for (u64 b : rhs) out.push_back(a + b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CubeSplit split_cube(const HilbertCube& cube, u64 n) {
  const std::size_t d = cube.dimension();
  if (d == 0) {
    throw EmptyCubeError("cannot split a cube of dimension 0");
  }
  const auto gens = cube.generators();
  // ceil((d+1)/2) == floor(d/2) + 1, so D takes a_{half+1}..a_d (1-based).
  // For d = 1 that would leave C = {a0}; the generator goes to C instead and
  // D = {0}. min(|C|, |D|) is 1 either way.
  const std::size_t half = std::max<std::size_t>(d / 2, 1);
  const HilbertCube lower(cube.base(), std::vector<u64>(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(half)));
  const HilbertCube upper(0, std::vector<u64>(gens.begin() + static_cast<std::ptrdiff_t>(half), gens.end()));

  CubeSplit split{expand_elements(lower), expand_elements(upper), n == 0 ? cube.top() : n};
  if (sumset(split.C, split.D) != expand_elements(cube)) {
    throw std::logic_error("C + D differs from the cube expansion for " + cube.to_string());
  }
  return split;
}

GyarmatiReport gyarmati_check(std::span<const u64> C, std::span<const u64> D, u64 n) {
  GyarmatiReport r;
  r.min_size = std::min(C.size(), D.size());
  r.bound_ln = 8.0 * std::log(static_cast<double>(n));
  r.bound_log2 = 8.0 * std::log2(static_cast<double>(n));
  r.satisfied = static_cast<double>(r.min_size) <= r.bound_ln;

  const IntSet sums = sumset(C, D);
  r.contained = std::all_of(sums.begin(), sums.end(), [](u64 v) { return is_square(v); });
  const bool parts_in_range = (C.empty() || C.back() <= n) && (D.empty() || D.back() <= n);
  r.within_window = parts_in_range && !sums.empty() && sums.front() >= 1 && sums.back() <= n;
  return r;
}

IntSet max_d_for_c(std::span<const u64> C, const SetOracle& oracle, u64 n) {
  if (C.empty()) throw DomainError("max_d_for_c needs a non-empty C");
  IntSet sorted(C.begin(), C.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const Sieve host = oracle.build_sieve(checked_add(n, sorted.back()));
  return intersect_shifts(sorted, host, n).elements();
}

double crs_reference_bound(unsigned k, u64 n) {
  if (k < 3) throw DomainError("CRS bound needs k >= 3");
  if (n == 0) throw DomainError("CRS bound needs n >= 1");
  const double exponent = 1.0 - 1.0 / static_cast<double>(k - 1);
  return 3.0 * std::pow(static_cast<double>(n), exponent);
}

std::vector<SweepRow> gyarmati_sweep(const SetOracle& oracle, u64 c_max, u64 n, unsigned threads) {
  if (n == 0) throw DomainError("sweep needs n >= 1");
  const Sieve host = oracle.build_sieve(checked_add(n, c_max));
  const double bound_ln = 8.0 * std::log(static_cast<double>(n));
  threads = std::max(1u, threads);

  // rows_by_first[c1] holds the rows for C = {c1, c2}, c2 ascending.
  std::vector<std::vector<SweepRow>> rows_by_first(static_cast<std::size_t>(c_max) + 1);
  auto worker = [&](unsigned id) {
    for (u64 c1 = id; c1 < c_max; c1 += threads) {
      auto& rows = rows_by_first[static_cast<std::size_t>(c1)];
      for (u64 c2 = c1 + 1; c2 <= c_max; ++c2) {
        const u64 pair[2] = {c1, c2};
        const Sieve d = intersect_shifts(pair, host, n);
        SweepRow row{{c1, c2}, d.count(), n, bound_ln, false};
        row.satisfied = static_cast<double>(std::min<std::size_t>(2, row.d_size)) <= bound_ln;
        rows.push_back(std::move(row));
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }

  std::vector<SweepRow> out;
  for (auto& rows : rows_by_first) {
    for (auto& row : rows) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace cubeforge
