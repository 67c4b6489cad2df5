#pragma once

// Independent reference implementations for the unit and acceptance suites.
// None of these call into the library's algorithms; they are slow on purpose.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cubeforge/cube.hpp"
#include "cubeforge/progression.hpp"

namespace cubeforge::testing {

// CUBEFORGE_SEED overrides the pinned default.
inline std::uint64_t test_seed() {
  if (const char* env = std::getenv("CUBEFORGE_SEED"); env != nullptr && *env != '\0') {
    return std::strtoull(env, nullptr, 10);
  }
  return 20260611;
}

inline bool naive_is_square(u64 x) {
  for (u64 y = 0; y * y <= x; ++y) {
    if (y * y == x) return true;
  }
  return false;
}

// All 2^d subset sums, deduplicated.
inline IntSet subset_sums(u64 base, const std::vector<u64>& gens) {
  std::set<u64> out;
  const std::size_t d = gens.size();
  for (u64 mask = 0; mask < (u64{1} << d); ++mask) {
    u64 s = base;
    for (std::size_t i = 0; i < d; ++i) {
      if ((mask >> i) & 1) s += gens[i];
    }
    out.insert(s);
  }
  return IntSet(out.begin(), out.end());
}

// Greedy k-AP-free set by trying every difference for every x.
inline IntSet naive_greedy_apfree(unsigned k, u64 n) {
  std::set<u64> chosen;
  for (u64 x = 1; x <= n; ++x) {
    bool completes = false;
    for (u64 h = 1; (k - 1) * h < x && !completes; ++h) {
      bool all = true;
      for (unsigned j = 1; j < k; ++j) all = all && chosen.count(x - j * h) != 0;
      completes = all;
    }
    if (!completes) chosen.insert(x);
  }
  return IntSet(chosen.begin(), chosen.end());
}

// Longest AP by dynamic programming over ending pairs: len[j][k] extends
// len[i][j] when B[i], B[j], B[k] are equally spaced. O(n^3) with the linear
// search for i. Ties: smallest start, then smallest difference.
inline APWitness dp_longest_ap(const IntSet& b) {
  const std::size_t n = b.size();
  APWitness best{b.at(0), 1, 1};
  std::vector<std::vector<u64>> len(n, std::vector<u64>(n, 2));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      const u64 diff = b[k] - b[j];
      for (std::size_t i = 0; i < j; ++i) {
        if (b[j] - b[i] == diff) len[j][k] = len[i][j] + 1;
      }
      const u64 length = len[j][k];
      const APWitness cand{b[k] - (length - 1) * diff, diff, length};
      if (cand.length > best.length ||
          (cand.length == best.length &&
           (cand.start < best.start || (cand.start == best.start && cand.difference < best.difference)))) {
        best = cand;
      }
    }
  }
  return best;
}

// Longest run b, b+h, ... inside B by walking from each b with a std::set.
inline APWitness walk_longest_with_difference(const IntSet& b, u64 h) {
  const std::set<u64> s(b.begin(), b.end());
  APWitness best{b.at(0), h, 1};
  for (u64 start : b) {
    u64 len = 1;
    while (s.count(start + len * h) != 0) ++len;
    if (len > best.length) best = APWitness{start, h, len};
  }
  return best;
}

// Every canonical cube inside member() ∩ [lo, n], by recursion over
// non-decreasing generator sequences with a full 2^d re-expansion at each
// step. `distinct` forbids repeats. Returns cubes of every dimension.
inline std::vector<std::pair<u64, std::vector<u64>>> brute_force_cubes(const std::function<bool(u64)>& member,
                                                                         u64 n, bool distinct, u64 lo = 1) {
  std::vector<std::pair<u64, std::vector<u64>>> out;
  std::vector<u64> gens;
  std::function<void(u64, u64)> extend = [&](u64 base, u64 sum) {
    out.emplace_back(base, gens);
    const u64 first = gens.empty() ? 1 : gens.back() + (distinct ? 1 : 0);
    for (u64 g = first; sum + g <= n; ++g) {
      gens.push_back(g);
      const IntSet h = subset_sums(base, gens);
      const bool inside = std::all_of(h.begin(), h.end(), [&](u64 x) { return x >= lo && x <= n && member(x); });
      if (inside) extend(base, sum + g);
      gens.pop_back();
    }
  };
  for (u64 base = lo; base <= n; ++base) {
    if (member(base)) extend(base, base);
  }
  return out;
}

}  // namespace cubeforge::testing
