#pragma once

// (l, m*, m, u)-trees: prefix-closed sets of sequences over [0, m*) whose
// maximal nodes all have length l and in which every node at a level in u has
// at least m children.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gapramsey/errors.hpp"
#include "gapramsey/seq.hpp"

namespace gapramsey {

struct LevelTree {
  std::size_t depth = 0;     // l
  std::uint32_t m_star = 0;  // alphabet size
  std::uint32_t m = 0;       // branching quota at levels in `levels`
  std::set<std::size_t> levels;  // u
  std::set<Seq> nodes;

  std::vector<Seq> leaves() const {
    std::vector<Seq> out;
    for (const auto& s : nodes) {
      if (s.size() == depth) out.push_back(s);
    }
    return out;
  }
};

/// Checks every defining clause. Levels may be any subset of [0, l); the
/// empty set of nodes is rejected.
inline bool validate_tree(const LevelTree& t) {
  if (t.m_star < t.m) return false;
  for (std::size_t lvl : t.levels) {
    if (lvl >= t.depth) return false;
  }
  if (t.nodes.empty()) return false;
  std::map<Seq, std::size_t> children;
  for (const auto& s : t.nodes) {
    if (s.size() > t.depth) return false;
    for (std::uint32_t x : s) {
      if (x >= t.m_star) return false;
    }
    if (!s.empty()) {
      Seq parent(s.begin(), s.end() - 1);
      if (!t.nodes.contains(parent)) return false;
      ++children[parent];
    }
  }
  for (const auto& s : t.nodes) {
    auto it = children.find(s);
    const std::size_t k = it == children.end() ? 0 : it->second;
    if (k == 0 && s.size() != t.depth) return false;
    if (t.levels.contains(s.size()) && k < t.m) return false;
  }
  return true;
}

inline constexpr std::uint64_t kSubtreeGuardDefault = 50'000'000;

namespace detail {

template <class Good>
class SupportSearch {
 public:
  SupportSearch(const Good& good, std::size_t depth, std::uint32_t m_star, std::uint32_t m,
                const std::set<std::size_t>& levels, std::uint64_t budget)
      : good_(good), depth_(depth), m_star_(m_star), m_(m), levels_(levels), budget_(budget) {}

  // Nodes of the extracted subtree below `node` (inclusive), or nullopt when
  // `node` is not supportive. Children are scanned in increasing order and the
  // scan stops once the quota of supportive children is met.
  std::optional<std::vector<Seq>> build(Seq& node) {
    if (++work_ > budget_) {
      throw SizeGuardError("good_subtree", "visited more than " + std::to_string(budget_) + " nodes");
    }
    if (node.size() == depth_) {
      if (!good_(static_cast<const Seq&>(node))) return std::nullopt;
      return std::vector<Seq>{node};
    }
    const std::size_t need = levels_.contains(node.size()) ? m_ : 1;
    std::vector<Seq> kept{node};
    std::size_t found = 0;
    for (std::uint32_t x = 0; x < m_star_ && found < need; ++x) {
      node.push_back(x);
      auto sub = build(node);
      node.pop_back();
      if (sub) {
        ++found;
        kept.insert(kept.end(), std::make_move_iterator(sub->begin()), std::make_move_iterator(sub->end()));
      }
    }
    if (found < need) return std::nullopt;
    return kept;
  }

 private:
  const Good& good_;
  std::size_t depth_;
  std::uint32_t m_star_;
  std::uint32_t m_;
  const std::set<std::size_t>& levels_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
};

}  // namespace detail

/// An (l, m*, m, u \ [0, |root|))-tree whose leaves all extend `root` and
/// satisfy `good`, or nullopt if none exists. A leaf is supportive iff good;
/// an inner node is supportive iff it has at least m (level in u) or 1
/// (otherwise) supportive children; the m least supportive children are kept.
template <class Good>
std::optional<LevelTree> good_subtree_exists(const Seq& root, const Good& good, std::size_t depth,
                                             std::uint32_t m_star, std::uint32_t m,
                                             const std::set<std::size_t>& levels,
                                             std::uint64_t budget = work_limit(kSubtreeGuardDefault)) {
  if (root.size() > depth) throw DomainError("good_subtree_exists: root longer than l");
  if (m_star < m) throw DomainError("good_subtree_exists: need m* >= m");
  for (std::uint32_t x : root) {
    if (x >= m_star) throw DomainError("good_subtree_exists: root entry not below m*");
  }
  std::set<std::size_t> remaining;
  for (std::size_t lvl : levels) {
    if (lvl >= depth) throw DomainError("good_subtree_exists: level outside [0, l)");
    if (lvl >= root.size()) remaining.insert(lvl);
  }
  detail::SupportSearch<Good> search(good, depth, m_star, m, remaining, budget);
  Seq cursor = root;
  auto below = search.build(cursor);
  if (!below) return std::nullopt;
  LevelTree t{depth, m_star, m, remaining, {}};
  for (std::size_t i = 0; i < root.size(); ++i) t.nodes.insert(Seq(root.begin(), root.begin() + i));
  t.nodes.insert(below->begin(), below->end());
  return t;
}

}  // namespace gapramsey
