#include "cubeforge/progression.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "cubeforge/set_oracle.hpp"

namespace cubeforge {

namespace {

bool member(std::span<const u64> set, u64 x) { return std::binary_search(set.begin(), set.end(), x); }

bool ap_less(const APWitness& a, const APWitness& b) {
  if (a.start != b.start) return a.start < b.start;
  return a.difference < b.difference;
}

}  // namespace

IntSet APWitness::elements() const {
  IntSet out;
  out.reserve(static_cast<std::size_t>(length));
  for (u64 j = 0; j < length; ++j) out.push_back(term(j));
  return out;
}

bool APWitness::lies_in(std::span<const u64> host) const {
  if (length == 0 || difference == 0) return false;
  for (u64 j = 0; j < length; ++j) {
    if (!member(host, term(j))) return false;
  }
  return true;
}

APWitness APWitness::checked(std::span<const u64> host, u64 start, u64 difference, u64 length) {
  if (length == 0) throw DomainError("AP witness needs length >= 1");
  if (difference == 0) throw DomainError("AP witness needs a positive difference");
  checked_add(start, checked_mul(length - 1, difference));
  APWitness w{start, difference, length};
  if (!w.lies_in(host)) throw DomainError("AP witness has a term outside the host set");
  return w;
}

OverlapTooSmallError::OverlapTooSmallError(std::size_t overlap, std::size_t set_size, const Rational& alpha)
    : DomainError("shift overlap too small: |B ∩ (B+h)| / |B| = " +
                  Rational(static_cast<std::int64_t>(overlap), static_cast<std::int64_t>(std::max<std::size_t>(set_size, 1)))
                      .to_string() +
                  " is not above 1 - alpha = " + (Rational(1) - alpha).to_string()),
      overlap_(overlap),
      set_size_(set_size) {}

std::size_t shift_overlap(std::span<const u64> set, u64 h) {
  // Two pointers: b ascending, b + h ascending.
  std::size_t count = 0;
  std::size_t j = 0;
  for (u64 b : set) {
    if (b > UINT64_MAX - h) break;
    const u64 target = b + h;
    while (j < set.size() && set[j] < target) ++j;
    if (j == set.size()) break;
    if (set[j] == target) ++count;
  }
  return count;
}

APWitness extract_ap_from_overlap(std::span<const u64> set, u64 h, const Rational& alpha) {
  if (set.empty()) throw DomainError("shift-overlap extraction needs a non-empty set");
  if (h == 0) throw DomainError("shift-overlap extraction needs h >= 1");
  if (alpha <= Rational(0) || alpha >= Rational(1)) {
    throw DomainError("alpha must lie in (0, 1), got " + alpha.to_string());
  }

  // |B ∩ (B+h)| > (1 - p/q)|B|  <=>  overlap * q > (q - p) * |B|.
  const std::size_t overlap = shift_overlap(set, h);
  if (BigInt(overlap) * alpha.den() <= (alpha.den() - alpha.num()) * BigInt(set.size())) {
    throw OverlapTooSmallError(overlap, set.size(), alpha);
  }

  // r(b): number of consecutive terms b, b+h, ... inside B. Filled from the
  // top down, so r(b + h) is known when b is visited.
  std::vector<u64> run(set.size(), 1);
  std::size_t j = set.size();
  for (std::size_t i = set.size(); i-- > 0;) {
    if (set[i] > UINT64_MAX - h) continue;
    const u64 target = set[i] + h;
    while (j > 0 && set[j - 1] > target) --j;
    if (j > 0 && set[j - 1] == target) run[i] = run[j - 1] + 1;
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < set.size(); ++i) {
    if (run[i] > run[best]) best = i;
  }
  APWitness witness{set[best], h, run[best]};

  const BigInt guaranteed = Rational(alpha.den(), alpha.num()).floor() + 1;
  if (BigInt(witness.length) < guaranteed) {
    throw std::logic_error("shift-overlap extraction returned a run shorter than floor(1/alpha) + 1");
  }
  return witness;
}

APWitness longest_ap_with_difference(std::span<const u64> set, u64 h) {
  if (set.empty()) throw DomainError("longest AP needs a non-empty set");
  if (h == 0) throw DomainError("AP difference must be >= 1");
  // Length of the run ending at set[i], built bottom-up.
  std::vector<u64> ending(set.size(), 1);
  APWitness best{set[0], h, 1};
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= h) {
      const auto it = std::lower_bound(set.begin(), set.begin() + static_cast<std::ptrdiff_t>(i), set[i] - h);
      if (it != set.begin() + static_cast<std::ptrdiff_t>(i) && *it == set[i] - h) {
        ending[i] = ending[static_cast<std::size_t>(it - set.begin())] + 1;
      }
    }
    const APWitness candidate{set[i] - (ending[i] - 1) * h, h, ending[i]};
    if (candidate.length > best.length || (candidate.length == best.length && candidate.start < best.start)) {
      best = candidate;
    }
  }
  return best;
}

APWitness longest_ap(std::span<const u64> set) {
  if (set.empty()) throw DomainError("longest AP needs a non-empty set");
  APWitness best{set[0], 1, 1};
  for (std::size_t i = 0; i < set.size(); ++i) {
    // Even a run through every remaining element could not win.
    if (set.size() - i <= best.length) break;
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const u64 start = set[i];
      const u64 diff = set[j] - start;
      // Not the first term of its maximal run; the longer run is seeded elsewhere.
      if (start >= diff && member(set, start - diff)) continue;
      u64 length = 2;
      u64 last = set[j];
      while (last <= UINT64_MAX - diff && member(set, last + diff)) {
        last += diff;
        ++length;
      }
      if (length > best.length) best = APWitness{start, diff, length};
    }
  }
  return best;
}

SquareApScan scan_squares_4ap(u64 max_n, unsigned threads) {
  if (max_n == 0) throw DomainError("square AP scan needs max_n >= 1");
  const Sieve squares = SetOracle::squares().build_sieve(max_n);
  const u64 root = isqrt(max_n);
  threads = std::max(1u, threads);

  std::vector<SquareApScan> partial(threads);
  auto worker = [&](unsigned id) {
    SquareApScan& out = partial[id];
    for (u64 x = 1 + id; x <= root; x += threads) {
      const u64 first = x * x;
      for (u64 y = x + 1; y <= root; ++y) {
        const u64 second = y * y;
        const u64 diff = second - first;
        ++out.pairs_checked;
        // Third term grows with y, so once it leaves the window the row is done.
        if (second > max_n - diff) break;
        const u64 third = second + diff;
        if (!squares.test(third)) continue;
        const APWitness three{first, diff, 3};
        ++out.three_term_count;
        if (!out.first_three_term || ap_less(three, *out.first_three_term)) out.first_three_term = three;
        if (third <= max_n - diff && squares.test(third + diff)) {
          const APWitness four{first, diff, 4};
          if (!out.four_term || ap_less(four, *out.four_term)) out.four_term = four;
        }
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }

  SquareApScan merged;
  merged.max_n = max_n;
  for (const SquareApScan& p : partial) {
    merged.pairs_checked += p.pairs_checked;
    merged.three_term_count += p.three_term_count;
    if (p.first_three_term && (!merged.first_three_term || ap_less(*p.first_three_term, *merged.first_three_term))) {
      merged.first_three_term = p.first_three_term;
    }
    if (p.four_term && (!merged.four_term || ap_less(*p.four_term, *merged.four_term))) {
      merged.four_term = p.four_term;
    }
  }
  return merged;
}

}  // namespace cubeforge
