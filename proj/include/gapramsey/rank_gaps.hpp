#pragma once

// Exhaustive check of how lexicographic ranks of even-coordinate sequences
// relate to their meets. For all length-l sequences over [0, m), doubled and
// ranked in base 2m-1, with ranks i < j and meet length k:
//   order:     i < j  iff  eta_i(k) < eta_j(k);
//   bounds:    low(m, l, k) <= j - i <= high(m, l, k);
//   monotone:  for two pairs with different meet lengths, the one with the
//              longer meet has the smaller rank difference.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gapramsey/seq.hpp"

namespace gapramsey {

struct RankGapPair {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  std::size_t meet = 0;
};

struct RankGapReport {
  std::uint32_t m = 0;
  std::size_t length = 0;
  std::size_t points = 0;  // |B|
  std::uint64_t pairs_checked = 0;
  std::uint64_t order_violations = 0;
  std::uint64_t bounds_violations = 0;
  std::uint64_t monotone_violations = 0;
  std::vector<RankGapPair> examples;  // first few offending pairs, any clause

  std::uint64_t violations() const { return order_violations + bounds_violations + monotone_violations; }
};

inline RankGapReport check_rank_gaps(std::uint32_t m, std::size_t length, std::size_t keep_examples = 10) {
  if (m < 1) throw DomainError("check_rank_gaps: need m >= 1");
  RankGapReport rep;
  rep.m = m;
  rep.length = length;
  const std::uint64_t base = 2 * static_cast<std::uint64_t>(m) - 1;
  std::vector<Seq> even;
  std::vector<std::uint64_t> rank;
  for (const auto& s : all_sequences(length, m)) {
    even.push_back(double_embed(s));
    rank.push_back(lex_rank(even.back(), base));
  }
  rep.points = even.size();
  auto note = [&](const RankGapPair& p) {
    if (rep.examples.size() < keep_examples) rep.examples.push_back(p);
  };

  std::vector<RankGapPair> pairs;
  for (std::size_t a = 0; a < even.size(); ++a) {
    for (std::size_t b = 0; b < even.size(); ++b) {
      if (a == b) continue;
      const std::size_t k = meet_len(even[a], even[b]);
      ++rep.pairs_checked;
      if ((rank[a] < rank[b]) != (even[a][k] < even[b][k])) {
        ++rep.order_violations;
        note({rank[a], rank[b], k});
      }
      if (rank[a] < rank[b]) {
        const std::uint64_t d = rank[b] - rank[a];
        if (d < low(m, length, k) || d > high(m, length, k)) {
          ++rep.bounds_violations;
          note({rank[a], rank[b], k});
        }
        pairs.push_back({rank[a], rank[b], k});
      }
    }
  }
  for (const auto& p : pairs) {
    for (const auto& q : pairs) {
      if (p.meet == q.meet) continue;
      if ((p.j - p.i < q.j - q.i) != (p.meet > q.meet)) {
        ++rep.monotone_violations;
        note(p);
      }
    }
  }
  return rep;
}

}  // namespace gapramsey
