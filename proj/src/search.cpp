#include "cubeforge/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cubeforge/progression.hpp"

namespace cubeforge {

namespace {

constexpr std::size_t kUnlimited = static_cast<std::size_t>(-1);

struct BranchResult {
  std::size_t best = 0;
  std::vector<HilbertCube> cubes;
  u64 nodes = 0;
};

class BranchSearch {
 public:
  BranchSearch(const SearchConfig& config, std::size_t cap, std::optional<unsigned> ap_free_k,
               std::atomic<u64>& global_nodes, std::atomic<bool>& abort)
      : config_(config), cap_(cap), ap_free_k_(ap_free_k), global_nodes_(global_nodes), abort_(abort) {}

  BranchResult run(u64 base, std::span<const u64> elements) {
    result_ = BranchResult{};
    base_ = base;
    gens_.clear();
    IntSet candidates;
    for (u64 s : elements) {
      if (s > base) candidates.push_back(s - base);
    }
    visit(IntSet{base}, base, candidates, 0);
    return std::move(result_);
  }

 private:
  // Upper bound on the dimension reachable from a node at `depth` with these candidates.
  std::size_t reach(std::size_t depth, std::size_t candidates) const {
    if (config_.mode == SearchMode::Distinct) return depth + candidates;
    if (cap_ == kUnlimited) return kUnlimited;
    return depth + cap_ * candidates;
  }

  void visit(const IntSet& layer, u64 top, const IntSet& candidates, std::size_t multiplicity) {
    ++result_.nodes;
    const u64 seen = global_nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (config_.node_budget != 0 && seen > config_.node_budget) {
      abort_.store(true, std::memory_order_relaxed);
    }
    if (abort_.load(std::memory_order_relaxed)) return;

    const std::size_t depth = gens_.size();
    result_.best = std::max(result_.best, depth);
    if (depth >= config_.min_dim) result_.cubes.emplace_back(base_, gens_);

    const u64 room = config_.max_n - top;
    const u64 last = gens_.empty() ? 0 : gens_.back();
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      const u64 g = candidates[idx];
      if (g > room) break;
      const bool repeat = !gens_.empty() && g == last;
      if (repeat && (config_.mode == SearchMode::Distinct || multiplicity >= cap_)) continue;

      // Next generators are >= g (> g when distinct) and must keep g' + g in the
      // candidate set; both lists are sorted, so one forward pass suffices.
      const u64 child_room = room - g;
      const u64 floor = config_.mode == SearchMode::Distinct ? g + 1 : g;
      IntSet next;
      std::size_t probe = idx;
      for (std::size_t j = idx; j < candidates.size() && candidates[j] <= child_room; ++j) {
        const u64 cand = candidates[j];
        if (cand < floor) continue;
        const u64 target = cand + g;
        while (probe < candidates.size() && candidates[probe] < target) ++probe;
        if (probe == candidates.size()) break;
        if (candidates[probe] == target) next.push_back(cand);
      }

      const std::size_t child_multiplicity = repeat ? multiplicity + 1 : 1;
      const std::size_t bound = reach(depth + 1, next.size());
      if (bound < config_.min_dim && bound <= result_.best) continue;

      IntSet child_layer = merge_shifted(layer, g);
      if (ap_free_k_ && longest_ap_with_difference(child_layer, g).length >= *ap_free_k_) continue;

      gens_.push_back(g);
      visit(child_layer, top + g, next, child_multiplicity);
      gens_.pop_back();
      if (abort_.load(std::memory_order_relaxed)) return;
    }
  }

  const SearchConfig& config_;
  std::size_t cap_;
  std::optional<unsigned> ap_free_k_;
  std::atomic<u64>& global_nodes_;
  std::atomic<bool>& abort_;

  BranchResult result_;
  u64 base_ = 0;
  std::vector<u64> gens_;
};

}  // namespace

void SearchConfig::validate() const {
  if (max_n == 0) throw DomainError("search needs max_n >= 1");
  if (min_dim == 0) throw DomainError("search needs min_dim >= 1");
  if (multiplicity_cap && *multiplicity_cap == 0) throw DomainError("multiplicity cap must be >= 1");
}

SearchReport search_max_cubes(const SearchConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();

  const u64 lo = config.allow_zero_base ? 0 : 1;
  const std::optional<unsigned> host_k = config.oracle.known_ap_free_length();
  std::size_t cap = 1;
  if (config.mode == SearchMode::Multiset) {
    if (config.multiplicity_cap) {
      cap = *config.multiplicity_cap;
    } else {
      cap = host_k ? *host_k - 1 : kUnlimited;
    }
  }
  const std::optional<unsigned> prune_k = config.ap_pruning ? host_k : std::nullopt;

  IntSet elements = config.oracle.elements_upto(config.max_n);
  if (lo == 1 && !elements.empty() && elements.front() == 0) elements.erase(elements.begin());
  if (elements.size() > memory_budget_bytes() / sizeof(u64)) {
    throw ResourceError("oracle window holds " + std::to_string(elements.size()) + " elements, over the memory budget");
  }

  std::vector<BranchResult> branches(elements.size());
  std::vector<bool> branch_done(elements.size(), false);
  std::atomic<std::size_t> next_branch{0};
  std::atomic<u64> global_nodes{0};
  std::atomic<bool> abort{false};
  std::mutex progress_mutex;
  std::size_t completed = 0;

  auto worker = [&]() {
    BranchSearch search(config, cap, prune_k, global_nodes, abort);
    while (!abort.load(std::memory_order_relaxed)) {
      const std::size_t i = next_branch.fetch_add(1);
      if (i >= elements.size()) break;
      BranchResult r = search.run(elements[i], elements);
      if (abort.load(std::memory_order_relaxed)) break;
      std::lock_guard lock(progress_mutex);
      branches[i] = std::move(r);
      branch_done[i] = true;
      ++completed;
      if (config.on_branch_done) {
        config.on_branch_done(BranchProgress{elements[i], completed, elements.size(), branches[i].best, branches[i].nodes});
      }
    }
  };
  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SearchReport report;
  report.max_n = config.max_n;
  report.mode = config.mode;
  report.min_dim = config.min_dim;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (!branch_done[i]) continue;
    BranchResult& b = branches[i];
    report.best_dimension = std::max(report.best_dimension.value_or(0), b.best);
    report.nodes_explored += b.nodes;
    for (HilbertCube& cube : b.cubes) report.cubes.push_back(std::move(cube));
  }
  std::sort(report.cubes.begin(), report.cubes.end(), report_order);
  report.cubes_total = report.cubes.size();
  if (config.max_results != 0 && report.cubes.size() > config.max_results) report.cubes.resize(config.max_results);

  if (config.max_n >= 16) {
    const double lnln = std::log(std::log(static_cast<double>(config.max_n)));
    report.theorem1_bound = 7.0 * lnln;
    report.multiset_bound = 21.0 * lnln;
  }
  const bool squares_like =
      config.oracle.kind() == OracleKind::Squares || config.oracle.kind() == OracleKind::Quadratic;
  if (squares_like && report.best_dimension && report.theorem1_bound) {
    const double bound = config.mode == SearchMode::Distinct ? *report.theorem1_bound : *report.multiset_bound;
    report.critical = static_cast<double>(*report.best_dimension) > bound;
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (abort.load()) {
    throw SearchBudgetExceeded("search node budget of " + std::to_string(config.node_budget) + " exhausted after " +
                                   std::to_string(completed) + " of " + std::to_string(elements.size()) +
                                   " top-level branches",
                               std::move(report), completed);
  }

  for (const HilbertCube& cube : report.cubes) {
    if (!verify_cube(cube, config.oracle, config.max_n, config.allow_zero_base).ok) {
      throw std::logic_error("search produced " + cube.to_string() + " which fails re-verification");
    }
  }
  return report;
}

CubeVerification verify_cube(const HilbertCube& cube, const SetOracle& oracle, u64 n, bool allow_zero) {
  const u64 lo = allow_zero ? 0 : 1;
  for (u64 x : expand_elements(cube)) {
    if (x < lo || x > n || !oracle.contains(x)) return CubeVerification{false, x};
  }
  return CubeVerification{};
}

}  // namespace cubeforge
