#include "cubeforge/set_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace cubeforge {

u64 memory_budget_bytes() {
  constexpr u64 kDefaultMb = 1024;
  const char* env = std::getenv("CUBEFORGE_MEM_BUDGET_MB");
  if (env == nullptr || *env == '\0') return kDefaultMb << 20;
  char* end = nullptr;
  const unsigned long long mb = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw DomainError(std::string("CUBEFORGE_MEM_BUDGET_MB is not an integer: ") + env);
  }
  return checked_mul(mb, u64{1} << 20);
}

// --- Sieve -------------------------------------------------------------

Sieve::Sieve(u64 limit, u64 budget_bytes) : limit_(limit) {
  if (limit == UINT64_MAX) {
    throw ResourceError("sieve limit exceeds addressable range");
  }
  const u64 words = limit / 64 + 1;
  if (words > budget_bytes / sizeof(u64)) {
    throw ResourceError("sieve over [0, " + std::to_string(limit) + "] needs " + std::to_string(words * 8) +
                        " bytes, budget is " + std::to_string(budget_bytes));
  }
  words_.assign(static_cast<std::size_t>(words), 0);
}

std::size_t Sieve::count() const {
  std::size_t n = 0;
  for (u64 w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

IntSet Sieve::elements(u64 lo, u64 hi) const {
  IntSet out;
  hi = std::min(hi, limit_);
  if (lo > hi) return out;
  for (u64 w = lo >> 6; w <= (hi >> 6); ++w) {
    u64 bits = words_[w];
    while (bits != 0) {
      const u64 x = (w << 6) | static_cast<u64>(std::countr_zero(bits));
      bits &= bits - 1;
      if (x >= lo && x <= hi) out.push_back(x);
    }
  }
  return out;
}

void Sieve::fill() {
  std::fill(words_.begin(), words_.end(), ~u64{0});
  const unsigned tail = static_cast<unsigned>((limit_ & 63) + 1);
  if (tail < 64) words_.back() &= (u64{1} << tail) - 1;
}

void Sieve::and_shifted(const Sieve& other, u64 shift) {
  const u64 word_shift = shift >> 6;
  const unsigned bit_shift = static_cast<unsigned>(shift & 63);
  const std::size_t other_words = other.words_.size();
  auto other_word = [&](u64 idx) -> u64 { return idx < other_words ? other.words_[idx] : 0; };
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const u64 src = w + word_shift;
    u64 v = other_word(src) >> bit_shift;
    if (bit_shift != 0) v |= other_word(src + 1) << (64 - bit_shift);
    words_[w] &= v;
  }
  // Bits of `other` above its limit are always clear, so nothing leaks in from
  // the padding of its last word. Clear our own padding too.
  const unsigned tail = static_cast<unsigned>((limit_ & 63) + 1);
  if (tail < 64) words_.back() &= (u64{1} << tail) - 1;
}

// --- greedy AP-free fixtures --------------------------------------------

IntSet greedy_apfree_elements(unsigned k, u64 n) {
  if (k < 3) {
    throw DomainError("greedy AP-free construction needs k >= 3");
  }
  IntSet admitted;
  std::vector<bool> member(static_cast<std::size_t>(n) + 1, false);
  for (u64 x = 1; x <= n; ++x) {
    bool completes = false;
    // y = x - h is the second-to-last term; walk y downward so h grows.
    for (auto it = admitted.rbegin(); it != admitted.rend() && !completes; ++it) {
      const u64 h = x - *it;
      // first term x - (k-1)h must be >= 1; larger h only makes it smaller.
      if (static_cast<u64>(k - 1) * h >= x) break;
      bool all = true;
      for (unsigned j = 2; j < k && all; ++j) {
        all = member[static_cast<std::size_t>(x - j * h)];
      }
      completes = all;
    }
    if (!completes) {
      admitted.push_back(x);
      member[static_cast<std::size_t>(x)] = true;
    }
  }
  return admitted;
}

// --- SetOracle -----------------------------------------------------------

SetOracle SetOracle::squares() { return SetOracle{}; }

SetOracle SetOracle::quadratic(QuadraticForm f, u64 min_argument) {
  f.validate();
  SetOracle o;
  o.kind_ = OracleKind::Quadratic;
  o.form_ = f;
  o.min_argument_ = min_argument;
  return o;
}

SetOracle SetOracle::explicit_set(IntSet elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  SetOracle o;
  o.kind_ = OracleKind::Explicit;
  o.elements_ = std::make_shared<const IntSet>(std::move(elements));
  return o;
}

SetOracle SetOracle::greedy_apfree(unsigned k, u64 limit) {
  SetOracle o;
  o.kind_ = OracleKind::GreedyApFree;
  o.ap_k_ = k;
  o.window_ = limit;
  o.elements_ = std::make_shared<const IntSet>(greedy_apfree_elements(k, limit));
  return o;
}

const IntSet& SetOracle::stored_elements() const {
  static const IntSet kEmpty;
  return elements_ ? *elements_ : kEmpty;
}

bool SetOracle::contains(u64 x) const {
  switch (kind_) {
    case OracleKind::Squares:
      return is_square(x);
    case OracleKind::Quadratic:
      return quadratic_membership(form_, static_cast<i128>(x), min_argument_).has_value();
    case OracleKind::GreedyApFree:
      if (x > window_) {
        throw DomainError("greedy AP-free oracle generated only up to " + std::to_string(window_) + ", asked about " +
                          std::to_string(x));
      }
      [[fallthrough]];
    case OracleKind::Explicit:
      return std::binary_search(elements_->begin(), elements_->end(), x);
  }
  return false;
}

IntSet SetOracle::elements_upto(u64 n) const {
  IntSet out;
  switch (kind_) {
    case OracleKind::Squares:
      for (u64 t = 0; t <= isqrt(n); ++t) out.push_back(t * t);
      break;
    case OracleKind::Quadratic: {
      // f(x) <= n  <=>  (2ax + b)^2 <= 4an + b^2 - 4ac.
      i128 bound;
      if (__builtin_mul_overflow(i128{4} * form_.a, static_cast<i128>(n), &bound) ||
          __builtin_add_overflow(bound, form_.shift(), &bound)) {
        throw OverflowError("quadratic enumeration bound overflows 128 bits");
      }
      if (bound < 0) break;
      const i128 t = static_cast<i128>(isqrt128(static_cast<u128>(bound)));
      const i128 two_a = i128{2} * form_.a;
      // floor((-t - b) / 2a) .. floor((t - b) / 2a), clipped to x >= min_argument.
      auto floor_div = [](i128 p, i128 q) { return p / q - ((p % q != 0) && (p < 0)); };
      const i128 lo = std::max<i128>(floor_div(-t - form_.b, two_a), static_cast<i128>(min_argument_));
      const i128 hi = floor_div(t - form_.b, two_a);
      for (i128 x = lo; x <= hi; ++x) {
        const i128 v = form_.value(x);
        if (v >= 0 && v <= static_cast<i128>(n)) out.push_back(static_cast<u64>(v));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
    }
    case OracleKind::GreedyApFree:
      if (n > window_) {
        throw DomainError("greedy AP-free oracle generated only up to " + std::to_string(window_) +
                          ", enumeration asked for " + std::to_string(n));
      }
      [[fallthrough]];
    case OracleKind::Explicit: {
      const auto end = std::upper_bound(elements_->begin(), elements_->end(), n);
      out.assign(elements_->begin(), end);
      break;
    }
  }
  return out;
}

IntSet SetOracle::enumerate(u64 n) const {
  IntSet out = elements_upto(n);
  if (!out.empty() && out.front() == 0) out.erase(out.begin());
  return out;
}

Sieve SetOracle::build_sieve(u64 n, u64 budget_bytes) const {
  Sieve sieve(n, budget_bytes);
  for (u64 x : elements_upto(n)) sieve.set(x);
  return sieve;
}

std::optional<unsigned> SetOracle::known_ap_free_length() const {
  switch (kind_) {
    case OracleKind::Squares:
    case OracleKind::Quadratic:
      return 4u;
    case OracleKind::GreedyApFree:
      return ap_k_;
    case OracleKind::Explicit:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string SetOracle::describe() const {
  switch (kind_) {
    case OracleKind::Squares:
      return "squares";
    case OracleKind::Quadratic:
      return "quadratic(" + form_.to_string() + ")";
    case OracleKind::Explicit:
      return "explicit(" + std::to_string(elements_->size()) + " elements)";
    case OracleKind::GreedyApFree:
      return "greedy_apfree(k=" + std::to_string(ap_k_) + ", n<=" + std::to_string(window_) + ")";
  }
  return "unknown";
}

bool operator==(const SetOracle& a, const SetOracle& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case OracleKind::Squares:
      return true;
    case OracleKind::Quadratic:
      return a.form_ == b.form_ && a.min_argument_ == b.min_argument_;
    case OracleKind::GreedyApFree:
      return a.ap_k_ == b.ap_k_ && a.window_ == b.window_;
    case OracleKind::Explicit:
      return *a.elements_ == *b.elements_;
  }
  return false;
}

}  // namespace cubeforge
