#pragma once

// Sample-and-verify for random level subtrees. A sampled tree picks, for
// every node eta it contains below depth l, a random m-subset A_eta of
// [0, m*); T is the set of sequences whose every entry eta(i) lies in
// A_{eta|i}, and h maps the full m-ary tree onto T by sending child index i to
// the (i+1)-th element of A. check_oplus tests the required property for a
// given colouring of the leaves of the m*-ary tree; find_good_subtree repeats
// sampling with derived seeds until the check passes.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gapramsey/core.hpp"
#include "gapramsey/errors.hpp"
#include "gapramsey/level_tree.hpp"
#include "gapramsey/rng.hpp"
#include "gapramsey/seq.hpp"

namespace gapramsey {

struct SampledTree {
  LevelTree tree;  // full branching m at every level, levels = [0, l)
  std::map<Seq, std::vector<std::uint32_t>> a_sets;  // eta -> sorted A_eta, for eta in T below depth l

  /// The level- and order-preserving isomorphism from sequences over [0, m).
  Seq h(const Seq& nu) const {
    if (nu.size() > tree.depth) throw DomainError("SampledTree::h: sequence longer than l");
    Seq eta;
    for (std::uint32_t i : nu) {
      const auto& a = a_sets.at(eta);
      if (i >= a.size()) throw DomainError("SampledTree::h: entry not below m");
      eta.push_back(a[i]);
    }
    return eta;
  }

  friend bool operator==(const SampledTree& x, const SampledTree& y) {
    return x.tree.nodes == y.tree.nodes && x.a_sets == y.a_sets;
  }
};

/// A_eta are drawn in preorder of the preimage nu (lexicographic DFS over the
/// full m-ary tree), each with Rng::sample_sorted from a single Rng(seed).
inline SampledTree sample_subtree(std::size_t depth, std::uint32_t m, std::uint32_t m_star, std::uint64_t seed) {
  if (m_star < m) throw DomainError("sample_subtree: need m* >= m");
  if (m < 1) throw DomainError("sample_subtree: need m >= 1");
  SampledTree st;
  st.tree.depth = depth;
  st.tree.m_star = m_star;
  st.tree.m = m;
  for (std::size_t lvl = 0; lvl < depth; ++lvl) st.tree.levels.insert(lvl);
  Rng rng(seed);
  Seq eta;
  auto grow = [&](auto&& self) -> void {
    st.tree.nodes.insert(eta);
    if (eta.size() == depth) return;
    auto a = rng.sample_sorted(m_star, m);
    st.a_sets.emplace(eta, a);
    for (std::uint32_t x : a) {
      eta.push_back(x);
      self(self);
      eta.pop_back();
    }
  };
  grow(grow);
  return st;
}

inline constexpr std::uint64_t kOplusGuardDefault = 10'000'000;

struct OplusViolation {
  std::vector<Seq> tuple;  // eta_1, ..., eta_k
};

/// Scans the k-tuples of leaves of st.tree in lexicographic order; for each
/// whose restrictions to i_star are pairwise distinct, looks for a tree S
/// rooted at eta_k|i_star (levels u \ [0, i_star)) whose leaves nu avoid
/// eta_1..eta_{k-1} and satisfy f({eta_j, eta_k}) = f({eta_j, nu}) for j < k.
/// `f` colours leaves of the m*-ary tree through their base-m* ranks.
inline std::optional<OplusViolation> check_oplus(const SampledTree& st, const PairColouring& f, std::size_t k,
                                                 std::size_t i_star, const std::set<std::size_t>& levels,
                                                 std::uint64_t guard = work_limit(kOplusGuardDefault)) {
  const auto& t = st.tree;
  if (k < 1) throw DomainError("check_oplus: need k >= 1");
  if (i_star >= t.depth) throw DomainError("check_oplus: need i_star < l");
  if (f.m() != checked_pow(t.m_star, t.depth)) throw DomainError("check_oplus: colouring must cover m*^l leaves");
  const auto leaves = t.leaves();
  std::uint64_t tuples = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (tuples > guard / std::max<std::size_t>(leaves.size(), 1)) {
      throw SizeGuardError("check_oplus", "more than " + std::to_string(guard) + " leaf tuples");
    }
    tuples *= leaves.size();
  }
  auto colour = [&](const Seq& a, const Seq& b) { return f(lex_rank(a, t.m_star), lex_rank(b, t.m_star)); };

  std::vector<std::size_t> idx(k, 0);
  std::vector<Seq> tuple(k);
  while (true) {
    std::set<Seq> heads;
    for (std::size_t j = 0; j < k; ++j) {
      tuple[j] = leaves[idx[j]];
      heads.insert(Seq(tuple[j].begin(), tuple[j].begin() + i_star));
    }
    if (heads.size() == k) {
      const Seq& last = tuple[k - 1];
      std::vector<Colour> target(k - 1);
      for (std::size_t j = 0; j + 1 < k; ++j) target[j] = colour(tuple[j], last);
      auto good = [&](const Seq& nu) {
        for (std::size_t j = 0; j + 1 < k; ++j) {
          if (nu == tuple[j] || colour(tuple[j], nu) != target[j]) return false;
        }
        return true;
      };
      Seq root(last.begin(), last.begin() + i_star);
      if (!good_subtree_exists(root, good, t.depth, t.m_star, t.m, levels)) return OplusViolation{tuple};
    }
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] + 1 == leaves.size()) idx[--pos] = 0;
    if (pos == 0) break;
    ++idx[pos - 1];
  }
  return std::nullopt;
}

struct GoodSubtreeResult {
  std::optional<SampledTree> tree;  // the passing sample
  std::size_t attempts = 0;         // samples drawn, including the passing one
  bool exhausted = false;
  std::vector<OplusViolation> violations;  // first violation of each failed attempt
};

/// Attempt a (1-based) samples with derive_seed(seed, a - 1).
inline GoodSubtreeResult find_good_subtree(const PairColouring& f, std::size_t k, std::size_t i_star,
                                           const std::set<std::size_t>& levels, std::size_t depth, std::uint32_t m,
                                           std::uint32_t m_star, std::uint64_t seed, std::size_t max_attempts) {
  GoodSubtreeResult res;
  for (std::size_t a = 1; a <= max_attempts; ++a) {
    res.attempts = a;
    auto st = sample_subtree(depth, m, m_star, derive_seed(seed, a - 1));
    if (auto v = check_oplus(st, f, k, i_star, levels)) {
      res.violations.push_back(std::move(*v));
      continue;
    }
    res.tree = std::move(st);
    return res;
  }
  res.exhausted = true;
  return res;
}

}  // namespace gapramsey
