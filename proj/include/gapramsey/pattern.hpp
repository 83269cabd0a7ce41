#pragma once

// Meet patterns: n distinct binary sequences of length n-1, listed so that
// each one after the first has a unique longest-meet predecessor among the
// earlier ones, with all these designated meet lengths distinct.
//
// build_pattern realises a gap order as such a pattern. Gap g receives the
// meet length L_g = n - 2 - rank(g), so the smallest gap gets the longest
// meet. The sorted sequences are built by induction on the number of points:
//   s_0 = 0^(n-1),   s_{g+1} = (s_g | L_g) ^ <1> ^ 0^(n-2-L_g),
// which makes meet(s_g, s_{g+1}) = L_g and keeps s_0 < s_1 < ... (s_g has a 1
// only at lengths L_h that are smaller than every later L, so s_g(L_g) = 0).
// The listing rho_1, rho_2, ... is then grown one element at a time: start
// from s_0 as the representative of the block [0, n-1]; for t = 0, 1, ...,
// n-2 split the block holding the gap g with L_g = t at g, and append the
// leftmost element of the half that has no representative, with the old
// representative as its designated predecessor. Every earlier element outside
// the block is separated from the new one by a shorter meet, so the
// predecessor is unique and its meet length is exactly t.
// sigma lists the listing positions of s_0, s_1, ..., s_{n-1}.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gapramsey/core.hpp"
#include "gapramsey/errors.hpp"
#include "gapramsey/seq.hpp"

namespace gapramsey {

struct MeetPattern {
  std::size_t n = 0;
  std::vector<Seq> rhos;
  std::vector<std::size_t> pred;  // pred[i-1]: designated predecessor of rhos[i], i = 1..n-1

  std::size_t designated_meet(std::size_t i) const { return meet_len(rhos.at(i), rhos.at(pred.at(i - 1))); }
  /// rho_i is below its predecessor at the split coordinate.
  bool designated_below(std::size_t i) const {
    const std::size_t k = designated_meet(i);
    return rhos[i][k] < rhos[pred[i - 1]][k];
  }
};

/// The designated predecessors if the listing is a valid meet pattern.
inline std::optional<std::vector<std::size_t>> validate_pattern(const std::vector<Seq>& rhos) {
  const std::size_t n = rhos.size();
  for (const auto& r : rhos) {
    if (r.size() + 1 != n) throw DomainError("validate_pattern: every sequence needs length n-1");
    for (std::uint32_t x : r) {
      if (x > 1) throw DomainError("validate_pattern: sequences must be binary");
    }
  }
  if (std::set<Seq>(rhos.begin(), rhos.end()).size() != n) return std::nullopt;
  std::vector<std::size_t> pred;
  std::set<std::size_t> lengths;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t best = 0;
    std::size_t best_len = 0;
    bool unique = false;
    for (std::size_t j = 0; j < i; ++j) {
      const std::size_t len = meet_len(rhos[i], rhos[j]);
      if (j == 0 || len > best_len) {
        best = j;
        best_len = len;
        unique = true;
      } else if (len == best_len) {
        unique = false;
      }
    }
    if (!unique || !lengths.insert(best_len).second) return std::nullopt;
    pred.push_back(best);
  }
  return pred;
}

struct BuiltPattern {
  MeetPattern pattern;
  std::vector<std::size_t> sigma;  // sigma[g]: listing index of the g-th sequence in lexicographic order
};

inline BuiltPattern build_pattern(const GapOrder& ord) {
  const std::size_t n = ord.n();
  if (n < 2) throw DomainError("build_pattern: need n >= 2");
  const std::size_t gaps = n - 1;
  std::vector<std::size_t> meet(gaps);
  for (std::size_t g = 0; g < gaps; ++g) meet[g] = gaps - 1 - ord.rank(g);

  std::vector<Seq> sorted(n, Seq(gaps, 0));
  for (std::size_t g = 0; g < gaps; ++g) {
    Seq next(sorted[g].begin(), sorted[g].begin() + meet[g]);
    next.push_back(1);
    next.resize(gaps, 0);
    sorted[g + 1] = std::move(next);
  }

  // Blocks are maximal runs of sorted positions not yet split; block_rep maps
  // a block's first position to its representative.
  std::vector<std::size_t> listing{0};
  std::vector<std::size_t> listing_pos(n, n);
  listing_pos[0] = 0;
  std::vector<std::size_t> pred;
  std::set<std::size_t> starts{0};
  std::vector<std::size_t> block_rep(n, n);
  block_rep[0] = 0;
  for (std::size_t t = 0; t < gaps; ++t) {
    const std::size_t g = ord.perm()[gaps - 1 - t];  // the gap whose meet length is t
    const std::size_t lo = *std::prev(starts.upper_bound(g));
    const std::size_t rep = block_rep[lo];
    const std::size_t added = rep <= g ? g + 1 : lo;
    starts.insert(g + 1);
    if (rep <= g) {
      block_rep[g + 1] = added;
    } else {
      block_rep[lo] = added;
      block_rep[g + 1] = rep;
    }
    pred.push_back(listing_pos[rep]);
    listing_pos[added] = listing.size();
    listing.push_back(added);
  }

  BuiltPattern out;
  out.pattern.n = n;
  for (std::size_t s : listing) out.pattern.rhos.push_back(sorted[s]);
  out.pattern.pred = std::move(pred);
  out.sigma = std::move(listing_pos);
  return out;
}

inline constexpr std::uint64_t kPatternSearchGuardDefault = 200'000'000;

/// Lexicographically least eta_1..eta_n (in pattern order) of length-l
/// sequences over [0, m) such that fp is constant on all pairs and the
/// designated meet lengths are distinct, ordered like the pattern's, with the
/// same split direction. Backtracks over the tuple with incremental checks.
template <class PairColourFn>
std::optional<std::vector<Seq>> find_pattern_homogeneous(const PairColourFn& fp, const MeetPattern& pattern,
                                                         std::size_t length, std::uint32_t m,
                                                         std::uint64_t budget = work_limit(kPatternSearchGuardDefault)) {
  const std::size_t n = pattern.n;
  if (n == 0) return std::vector<Seq>{};
  const auto pool = all_sequences(length, m);
  std::vector<std::size_t> target(n, 0);
  std::vector<bool> below(n, false);
  for (std::size_t i = 1; i < n; ++i) {
    target[i] = pattern.designated_meet(i);
    below[i] = pattern.designated_below(i);
  }
  std::vector<std::size_t> pick(n);
  std::vector<std::size_t> lambda(n, 0);
  Colour colour = 0;
  std::uint64_t work = 0;

  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t cand = 0; cand < pool.size(); ++cand) {
      if (++work > budget) {
        throw SizeGuardError("pattern_search", "explored more than " + std::to_string(budget) + " nodes");
      }
      const Seq& eta = pool[cand];
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = pick[j] != cand;
      if (!ok) continue;
      if (i >= 1) {
        const Seq& parent = pool[pick[pattern.pred[i - 1]]];
        const std::size_t lam = meet_len(eta, parent);
        if ((eta[lam] < parent[lam]) != below[i]) continue;
        for (std::size_t j = 1; j < i && ok; ++j) {
          ok = lam != lambda[j] && ((lam < lambda[j]) == (target[i] < target[j]));
        }
        if (!ok) continue;
        if (i == 1) {
          colour = fp(pool[pick[0]], eta);
        } else {
          for (std::size_t j = 0; j < i && ok; ++j) ok = fp(pool[pick[j]], eta) == colour;
          if (!ok) continue;
        }
        lambda[i] = lam;
      }
      pick[i] = cand;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  std::vector<Seq> out;
  for (std::size_t p : pick) out.push_back(pool[p]);
  return out;
}

}  // namespace gapramsey
