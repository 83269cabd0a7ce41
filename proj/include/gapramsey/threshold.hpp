#pragma once

// Exact thresholds at desk scale. A counterexample for (n, c, m, <*) is a
// colouring of the pairs of [0, m) with no witness for <*. Existence is a
// DPLL over pair slots; the lexicographically least table is then built slot
// by slot in pair_index order, keeping the smallest colour whose prefix still
// extends to a counterexample.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gapramsey/core.hpp"
#include "gapramsey/errors.hpp"
#include "gapramsey/search.hpp"

namespace gapramsey {

inline constexpr std::uint64_t kCounterexampleGuardDefault = 4'000'000'000ULL;
inline constexpr std::uint64_t kCandidateGuardDefault = 50'000'000ULL;

/// An n-subset of [0, m) whose gaps are distinct and ordered by <*, given by
/// the pair slots of its C(n,2) pairs (ascending).
struct CandidateTuple {
  std::vector<std::size_t> points;
  std::vector<std::size_t> slots;
};

/// All candidate tuples, in lexicographic order of their points.
inline std::vector<CandidateTuple> candidate_tuples(std::size_t n, std::size_t m, const GapOrder& ord,
                                                    std::uint64_t guard = work_limit(kCandidateGuardDefault)) {
  if (ord.n() != n) throw DomainError("candidate_tuples: order size differs from n");
  std::vector<CandidateTuple> out;
  if (n == 0 || n > m) return out;
  if (detail::binomial_saturating(m, n) > guard) {
    throw SizeGuardError("candidate_tuples", "C(m, n) exceeds " + std::to_string(guard));
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    bool ok = true;
    for (std::size_t g = 0; g + 1 < n && ok; ++g) {
      for (std::size_t h = 0; h + 1 < n && ok; ++h) {
        if (g == h) continue;
        const std::size_t bg = idx[g + 1] - idx[g];
        const std::size_t bh = idx[h + 1] - idx[h];
        if (bg == bh || (ord.precedes(g, h) && bg > bh)) ok = false;
      }
    }
    if (ok) {
      CandidateTuple t{idx, {}};
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) t.slots.push_back(pair_index(idx[a], idx[b], m));
      }
      std::sort(t.slots.begin(), t.slots.end());
      out.push_back(std::move(t));
    }
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == m - n + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace detail {

// DPLL over pair slots with unit propagation of forced colours and
// most-constrained-slot branching.
class CounterexampleExistence {
 public:
  CounterexampleExistence(std::size_t n, std::size_t c, std::size_t m, const GapOrder& ord, std::uint64_t budget)
      : c_(c), budget_(budget), slots_(pair_count(m)), containing_(slots_), colours_(slots_, kFree),
        forbid_(slots_ * c, 0) {
    for (auto& t : candidate_tuples(n, m, ord)) {
      if (t.slots.empty()) {
        trivially_blocked_ = true;
        continue;
      }
      const std::size_t id = tuples_.size();
      for (std::size_t s : t.slots) containing_[s].push_back(id);
      tuples_.push_back(std::move(t.slots));
    }
    free_.resize(tuples_.size());
    count_.assign(tuples_.size() * c, 0);
    for (std::size_t t = 0; t < tuples_.size(); ++t) free_[t] = tuples_[t].size();
  }

  bool exists() {
    if (!prepare()) return false;
    // By colour symmetry the first branched slot may be given colour 0.
    const auto first = pick_slot();
    if (!first) return true;
    if (forbid_[*first * c_] != 0) return false;
    if (!assign_and_propagate(*first, 0)) return false;
    return search();
  }

  /// The lexicographically least counterexample table, if any.
  std::optional<std::vector<Colour>> lex_least() {
    if (!prepare() || !extendable()) return std::nullopt;
    for (std::size_t e = 0; e < slots_; ++e) {
      if (colours_[e] != kFree) continue;  // forced by propagation
      bool fixed = false;
      for (std::size_t d = 0; d < c_ && !fixed; ++d) {
        if (forbid_[e * c_ + d] != 0) continue;
        const std::size_t placed_mark = placed_.size();
        const std::size_t forbid_mark = trail_.size();
        fixed = assign_and_propagate(e, static_cast<Colour>(d)) && extendable();
        if (!fixed) undo(placed_mark, forbid_mark);
      }
      if (!fixed) throw std::logic_error("counterexample_search: extendable prefix has no extension");
    }
    return colours_;
  }

  std::span<const Colour> colours() const noexcept { return colours_; }
  std::uint64_t work() const noexcept { return work_; }

 private:
  static constexpr Colour kFree = 0xFF;

  bool prepare() {
    if (trivially_blocked_) return false;
    for (std::size_t t = 0; t < tuples_.size(); ++t) {
      if (tuples_[t].size() == 1) {
        for (std::size_t d = 0; d < c_; ++d) ++forbid_[tuples_[t][0] * c_ + d];
      }
    }
    for (std::size_t s = 0; s < slots_; ++s) {
      if (allowed_count(s) == 0) return false;
    }
    return true;
  }

  // Whether the current partial colouring extends; the state is left as found.
  bool extendable() {
    const std::size_t placed_mark = placed_.size();
    const std::size_t forbid_mark = trail_.size();
    const bool ok = search();
    undo(placed_mark, forbid_mark);
    return ok;
  }

  std::size_t allowed_count(std::size_t s) const {
    std::size_t k = 0;
    for (std::size_t d = 0; d < c_; ++d) k += forbid_[s * c_ + d] == 0;
    return k;
  }

  // Free slot with the highest weight of live tuples (tuples whose coloured
  // slots share one colour); a tuple with `coloured` coloured slots adds 4^coloured.
  std::optional<std::size_t> pick_slot() const {
    std::optional<std::size_t> best;
    std::uint64_t best_score = 0;
    for (std::size_t s = 0; s < slots_; ++s) {
      if (colours_[s] != kFree) continue;
      std::uint64_t score = 0;
      for (std::size_t t : containing_[s]) {
        const std::size_t coloured = tuples_[t].size() - free_[t];
        bool live = coloured == 0;
        for (std::size_t d = 0; d < c_ && !live; ++d) live = count_[t * c_ + d] == coloured;
        if (live) score += std::uint64_t{1} << (2 * coloured);
      }
      if (!best || score > best_score) {
        best = s;
        best_score = score;
      }
    }
    return best;
  }

  bool search() {
    const auto slot = pick_slot();
    if (!slot) return true;
    const std::size_t e = *slot;
    for (std::size_t d = 0; d < c_; ++d) {
      if (forbid_[e * c_ + d] != 0) continue;
      if (++work_ > budget_) {
        throw SizeGuardError("counterexample_search", "explored more than " + std::to_string(budget_) + " nodes");
      }
      const std::size_t placed_mark = placed_.size();
      const std::size_t forbid_mark = trail_.size();
      if (assign_and_propagate(e, static_cast<Colour>(d)) && search()) return true;
      undo(placed_mark, forbid_mark);
    }
    return false;
  }

  bool assign_and_propagate(std::size_t e, Colour d) {
    std::vector<std::pair<std::size_t, Colour>> queue{{e, d}};
    while (!queue.empty()) {
      auto [s, x] = queue.back();
      queue.pop_back();
      if (colours_[s] != kFree) {
        if (colours_[s] != x) return false;
        continue;
      }
      if (forbid_[s * c_ + x] != 0) return false;
      colours_[s] = x;
      placed_.push_back(s);
      bool ok = true;  // every tuple of s is updated even after a conflict, so undo stays exact
      for (std::size_t t : containing_[s]) {
        --free_[t];
        const std::size_t k = tuples_[t].size();
        if (++count_[t * c_ + x] == k - 1 && free_[t] == 1) {
          for (std::size_t v : tuples_[t]) {
            if (colours_[v] != kFree) continue;
            ++forbid_[v * c_ + x];
            trail_.push_back(v * c_ + x);
            const std::size_t left = allowed_count(v);
            if (left == 0) ok = false;
            if (left == 1) {
              for (std::size_t y = 0; y < c_; ++y) {
                if (forbid_[v * c_ + y] == 0) queue.emplace_back(v, static_cast<Colour>(y));
              }
            }
            break;
          }
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  void undo(std::size_t placed_mark, std::size_t forbid_mark) {
    while (trail_.size() > forbid_mark) {
      --forbid_[trail_.back()];
      trail_.pop_back();
    }
    while (placed_.size() > placed_mark) {
      const std::size_t s = placed_.back();
      placed_.pop_back();
      const Colour x = colours_[s];
      for (std::size_t t : containing_[s]) {
        ++free_[t];
        --count_[t * c_ + x];
      }
      colours_[s] = kFree;
    }
  }

  std::size_t c_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  std::size_t slots_;
  bool trivially_blocked_ = false;
  std::vector<std::vector<std::size_t>> tuples_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<Colour> colours_;
  std::vector<std::size_t> free_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> forbid_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> placed_;
};

}  // namespace detail

/// The lexicographically least colouring table with no witness for `ord`, or
/// nullopt when every colouring has one. Existence is settled first by the
/// propagating DPLL; the table is then fixed one slot at a time in pair_index
/// order. Returned colourings are certified by the exhaustive witness oracle.
inline std::optional<PairColouring> counterexample_search(std::size_t n, std::size_t c, std::size_t m,
                                                          const GapOrder& ord,
                                                          std::uint64_t budget = work_limit(kCounterexampleGuardDefault)) {
  if (n < 1) throw DomainError("counterexample_search: n must be at least 1");
  if (m < 2 || c < 1 || c > kMaxColours) throw DomainError("counterexample_search: need m >= 2, 1 <= c <= 256");
  if (ord.n() != n) throw DomainError("counterexample_search: order size differs from n");
  detail::CounterexampleExistence probe(n, c, m, ord, budget);
  if (!probe.exists()) return std::nullopt;
  detail::CounterexampleExistence lex(n, c, m, ord, budget);
  auto table = lex.lex_least();
  if (!table) throw std::logic_error("counterexample_search: lexicographic search missed an existing colouring");
  auto f = std::optional<PairColouring>(std::in_place, m, c, std::move(*table));
  if (find_witness_exhaustive(*f, n, ord)) {
    throw std::logic_error("counterexample_search: returned colouring has a witness");
  }
  return f;
}

struct Verdict {
  bool holds = true;
  std::optional<std::pair<PairColouring, GapOrder>> counterexample;
};

/// (*)^{n,c}_m: every c-colouring of [0, m) has a witness for every gap order.
/// Orders are tried in lexicographic permutation order and the first failing
/// one is reported; with threads > 1 orders are searched concurrently and the
/// same answer is returned.
inline Verdict property_holds(std::size_t n, std::size_t c, std::size_t m, unsigned threads = 1,
                              std::uint64_t budget = work_limit(kCounterexampleGuardDefault)) {
  const auto orders = GapOrder::all(n);
  if (threads <= 1) {
    for (const auto& ord : orders) {
      if (auto f = counterexample_search(n, c, m, ord, budget)) return {false, std::make_pair(*f, ord)};
    }
    return {};
  }
  for (std::size_t base = 0; base < orders.size(); base += threads) {
    std::vector<std::future<std::optional<PairColouring>>> jobs;
    for (std::size_t i = base; i < std::min(orders.size(), base + threads); ++i) {
      jobs.push_back(std::async(std::launch::async,
                                [&, i] { return counterexample_search(n, c, m, orders[i], budget); }));
    }
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      if (auto f = jobs[k].get()) {
        for (std::size_t rest = k + 1; rest < jobs.size(); ++rest) jobs[rest].wait();
        return {false, std::make_pair(*f, orders[base + k])};
      }
    }
  }
  return {};
}

/// Least m <= m_cap with property_holds(n, c, m), scanning upward once (the
/// property is monotone in m by restriction of colourings).
inline std::optional<std::size_t> r_exact(std::size_t n, std::size_t c, std::size_t m_cap, unsigned threads = 1,
                                          std::uint64_t budget = work_limit(kCounterexampleGuardDefault)) {
  if (n <= 1) return m_cap >= 1 ? std::optional<std::size_t>(1) : std::nullopt;
  for (std::size_t m = 2; m <= m_cap; ++m) {
    if (property_holds(n, c, m, threads, budget).holds) return m;
  }
  return std::nullopt;
}

}  // namespace gapramsey
