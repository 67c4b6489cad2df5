#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cubeforge/cube.hpp"
#include "cubeforge/set_oracle.hpp"

namespace cubeforge {

enum class SearchMode { Distinct, Multiset };

struct BranchProgress {
  u64 base = 0;
  std::size_t completed = 0;  // top-level branches finished so far
  std::size_t total = 0;
  std::size_t branch_best = 0;
  u64 branch_nodes = 0;
};

struct SearchConfig {
  SetOracle oracle = SetOracle::squares();
  u64 max_n = 1;
  SearchMode mode = SearchMode::Distinct;
  // Cubes of at least this dimension are listed; best_dimension is exact regardless.
  std::size_t min_dim = 1;
  // 0 lists every cube found.
  std::size_t max_results = 0;
  unsigned threads = 1;
  // Admit a0 = 0 (the subset-sum case). Elements then range over [0, max_n].
  bool allow_zero_base = false;
  // For hosts known to be k-AP-free, reject a generator g whose new layer
  // holds a k-term AP of difference g. Never changes the results.
  bool ap_pruning = false;
  // Multiset mode only. Defaults to k - 1 for hosts known to be k-AP-free
  // (3 for squares), unlimited otherwise.
  std::optional<std::size_t> multiplicity_cap;
  // Abort with SearchBudgetExceeded after this many nodes; 0 means unlimited.
  u64 node_budget = 0;
  // Called once per finished top-level branch (one per base a0), serialized.
  std::function<void(const BranchProgress&)> on_branch_done;

  void validate() const;
};

struct SearchReport {
  u64 max_n = 0;
  SearchMode mode = SearchMode::Distinct;
  std::size_t min_dim = 1;
  // Largest dimension of any cube inside oracle ∩ [1, max_n]; nullopt when
  // that window holds no element at all.
  std::optional<std::size_t> best_dimension;
  // Canonical cubes with dimension >= min_dim, ordered by (dimension desc,
  // base asc, generators lex), truncated to max_results.
  std::vector<HilbertCube> cubes;
  u64 cubes_total = 0;
  // Deterministic: the pruning state never crosses top-level branches.
  u64 nodes_explored = 0;
  double elapsed_seconds = 0;
  // 7 ln ln N and 21 ln ln N, present for N >= 16.
  std::optional<double> theorem1_bound;
  std::optional<double> multiset_bound;
  // best_dimension above the bound for its mode on a squares/quadratic host.
  bool critical = false;
};

class SearchBudgetExceeded : public ResourceError {
 public:
  SearchBudgetExceeded(const std::string& what, SearchReport partial, std::size_t branches_done)
      : ResourceError(what), partial_(std::move(partial)), branches_done_(branches_done) {}
  const SearchReport& partial() const { return partial_; }
  std::size_t branches_done() const { return branches_done_; }

 private:
  SearchReport partial_;
  std::size_t branches_done_;
};

// Exhaustive depth-first search over bases a0 in the oracle and generator
// sequences a1 <= a2 <= ... (strict in Distinct mode). A generator g is
// admitted at layer H_i only if H_i + g lies in the oracle; candidates are
// kept as the set {g : H_i + g ⊆ S}, which shrinks to cand ∩ (cand - g)
// when g is taken.
SearchReport search_max_cubes(const SearchConfig& config);

struct CubeVerification {
  bool ok = true;
  std::optional<u64> offender;  // smallest element outside oracle ∩ [lo, n]
};

// Every element of the expansion lies in the oracle and in [1, n] ([0, n]
// when allow_zero is set).
CubeVerification verify_cube(const HilbertCube& cube, const SetOracle& oracle, u64 n, bool allow_zero = false);

}  // namespace cubeforge
