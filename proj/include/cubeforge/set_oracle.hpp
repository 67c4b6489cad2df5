#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubeforge/checked.hpp"
#include "cubeforge/cube.hpp"
#include "cubeforge/quadratic.hpp"

namespace cubeforge {

// Memory cap for sieves, in bytes. Reads CUBEFORGE_MEM_BUDGET_MB, default 1024 MB.
u64 memory_budget_bytes();

// Immutable-after-build membership bitmap over [0, limit].
class Sieve {
 public:
  Sieve() = default;
  // All-clear table over [0, limit]; ResourceError when it exceeds `budget_bytes`.
  explicit Sieve(u64 limit, u64 budget_bytes = memory_budget_bytes());

  u64 limit() const { return limit_; }
  bool test(u64 x) const { return x <= limit_ && ((words_[x >> 6] >> (x & 63)) & 1) != 0; }
  void set(u64 x) { words_[x >> 6] |= u64{1} << (x & 63); }
  // Sets every bit in [0, limit].
  void fill();
  std::size_t count() const;

  // Elements in [lo, hi], ascending.
  IntSet elements(u64 lo = 0, u64 hi = UINT64_MAX) const;

  // this[x] &= other[x + shift] for x in [0, limit]; bits past other.limit() read as clear.
  void and_shifted(const Sieve& other, u64 shift);

 private:
  u64 limit_ = 0;
  std::vector<u64> words_;
};

enum class OracleKind { Squares, Quadratic, Explicit, GreedyApFree };

// Membership and bounded enumeration for the host sets cubes live in.
class SetOracle {
 public:
  static SetOracle squares();
  // min_argument is the smallest x admitted in {f(x)}: 1 by default, 0 to treat 0 as natural.
  static SetOracle quadratic(QuadraticForm f, u64 min_argument = 1);
  static SetOracle explicit_set(IntSet elements);
  // Greedy k-AP-free set over [1, limit]. Membership beyond `limit` is undefined
  // and raises DomainError.
  static SetOracle greedy_apfree(unsigned k, u64 limit);

  OracleKind kind() const { return kind_; }
  const QuadraticForm& form() const { return form_; }
  u64 min_argument() const { return min_argument_; }
  unsigned ap_k() const { return ap_k_; }
  // Largest x for which contains() is defined; UINT64_MAX for unbounded kinds.
  u64 window() const { return window_; }
  // Stored elements for Explicit and GreedyApFree oracles.
  const IntSet& stored_elements() const;

  bool contains(u64 x) const;

  // {x in S : 1 <= x <= n}, sorted.
  IntSet enumerate(u64 n) const;
  // Same, but starting at 0.
  IntSet elements_upto(u64 n) const;

  Sieve build_sieve(u64 n, u64 budget_bytes = memory_budget_bytes()) const;

  // Smallest k for which the set is known to contain no k-term AP: 4 for
  // squares and quadratic images, k for greedy fixtures, none for explicit sets.
  std::optional<unsigned> known_ap_free_length() const;

  std::string describe() const;

  friend bool operator==(const SetOracle& a, const SetOracle& b);

 private:
  OracleKind kind_ = OracleKind::Squares;
  QuadraticForm form_{};
  u64 min_argument_ = 1;
  unsigned ap_k_ = 0;
  u64 window_ = UINT64_MAX;
  std::shared_ptr<const IntSet> elements_;
};

// Scan 1..n ascending and admit x unless it is the last term of a k-term AP
// whose other terms were already admitted.
IntSet greedy_apfree_elements(unsigned k, u64 n);

}  // namespace cubeforge
