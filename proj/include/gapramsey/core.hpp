#pragma once

// Pair colourings of [0,m), linear orders on gap indices, witnesses, and the
// definitional verifier for the ordered-gap Ramsey property.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gapramsey/errors.hpp"
#include "gapramsey/rng.hpp"

namespace gapramsey {

using Colour = std::uint8_t;
inline constexpr std::size_t kMaxColours = 256;

/// Offset of the unordered pair {i, j}, i < j < m, in the flat colour table.
/// Pairs are laid out row by row: (0,1), (0,2), ..., (0,m-1), (1,2), ...
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t m) {
  if (i >= j || j >= m) {
    throw DomainError("pair_index: need i < j < m, got (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") with m = " + std::to_string(m));
  }
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

inline constexpr std::size_t pair_count(std::size_t m) { return m * (m - 1) / 2; }

/// A total colouring f of the unordered pairs of [0, m) with c colours.
class PairColouring {
 public:
  PairColouring(std::size_t m, std::size_t c, std::vector<Colour> colours)
      : m_(m), c_(c), colours_(std::move(colours)) {
    if (m < 2) throw DomainError("PairColouring: m must be at least 2");
    if (c < 1 || c > kMaxColours) throw DomainError("PairColouring: c must be in [1, 256]");
    if (colours_.size() != pair_count(m)) {
      throw DomainError("PairColouring: table length " + std::to_string(colours_.size()) +
                        " != m(m-1)/2 = " + std::to_string(pair_count(m)));
    }
    for (Colour x : colours_) {
      if (x >= c) throw DomainError("PairColouring: colour out of range");
    }
  }

  static PairColouring constant(std::size_t m, std::size_t c, Colour colour = 0) {
    return PairColouring(m, c, std::vector<Colour>(pair_count(m), colour));
  }

  std::size_t m() const noexcept { return m_; }
  std::size_t c() const noexcept { return c_; }
  std::span<const Colour> table() const noexcept { return colours_; }

  /// Colour of {i, j}; argument order is irrelevant.
  Colour operator()(std::size_t i, std::size_t j) const {
    if (i == j || i >= m_ || j >= m_) {
      throw DomainError("colour_of: need distinct points in [0, m)");
    }
    if (i > j) std::swap(i, j);
    return colours_[i * m_ - i * (i + 1) / 2 + (j - i - 1)];
  }

  friend bool operator==(const PairColouring&, const PairColouring&) = default;

 private:
  std::size_t m_;
  std::size_t c_;
  std::vector<Colour> colours_;
};

inline Colour colour_of(const PairColouring& f, std::size_t i, std::size_t j) { return f(i, j); }

/// A linear order <* on the gap indices {0, ..., n-2}, stored as the list of
/// gap indices from smallest gap to largest.
class GapOrder {
 public:
  GapOrder(std::size_t n, std::vector<std::size_t> perm) : n_(n), perm_(std::move(perm)) {
    const std::size_t len = n > 0 ? n - 1 : 0;
    if (perm_.size() != len) {
      throw DomainError("GapOrder: expected " + std::to_string(len) + " gap indices for n = " +
                        std::to_string(n));
    }
    rank_.assign(len, len);
    for (std::size_t pos = 0; pos < len; ++pos) {
      if (perm_[pos] >= len || rank_[perm_[pos]] != len) {
        throw DomainError("GapOrder: not a permutation of {0..n-2}");
      }
      rank_[perm_[pos]] = pos;
    }
  }

  static GapOrder identity(std::size_t n) {
    std::vector<std::size_t> p(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    return GapOrder(n, std::move(p));
  }

  /// Every linear order on {0..n-2}, in lexicographic permutation order.
  static std::vector<GapOrder> all(std::size_t n) {
    std::vector<GapOrder> out;
    GapOrder first = identity(n);
    std::vector<std::size_t> p = first.perm_;
    do {
      out.emplace_back(n, p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  std::size_t n() const noexcept { return n_; }
  std::span<const std::size_t> perm() const noexcept { return perm_; }
  /// Position of gap `i` in increasing-gap order.
  std::size_t rank(std::size_t i) const { return rank_.at(i); }
  /// i <* j.
  bool precedes(std::size_t i, std::size_t j) const { return rank_.at(i) < rank_.at(j); }

  friend bool operator==(const GapOrder& a, const GapOrder& b) {
    return a.n_ == b.n_ && a.perm_ == b.perm_;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> perm_;
  std::vector<std::size_t> rank_;
};

/// A strictly increasing tuple a_0 < ... < a_{n-1}.
class Witness {
 public:
  explicit Witness(std::vector<std::size_t> points) : points_(std::move(points)) {
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (points_[i - 1] >= points_[i]) throw DomainError("Witness: points must be strictly increasing");
    }
  }

  std::size_t n() const noexcept { return points_.size(); }
  std::span<const std::size_t> points() const noexcept { return points_; }
  std::size_t operator[](std::size_t i) const { return points_.at(i); }

  /// b_l = a_{l+1} - a_l.
  std::vector<std::size_t> gaps() const {
    std::vector<std::size_t> b;
    for (std::size_t i = 1; i < points_.size(); ++i) b.push_back(points_[i] - points_[i - 1]);
    return b;
  }

  friend bool operator==(const Witness&, const Witness&) = default;

 private:
  std::vector<std::size_t> points_;
};

inline std::vector<std::size_t> gaps(const Witness& a) { return a.gaps(); }

struct VerifyReport {
  bool monochromatic = false;
  std::optional<Colour> colour;  // set when monochromatic and n >= 2
  bool gaps_distinct = false;
  bool order_respected = false;
  bool overall = false;
};

/// Checks clauses (a) and (b): f constant on all pairs of `a`, and the gaps
/// distinct and ordered by `ord`. Gap clauses are vacuous for n <= 2.
inline VerifyReport verify_witness(const PairColouring& f, const Witness& a, const GapOrder& ord) {
  if (a.n() != ord.n()) throw DomainError("verify_witness: witness size differs from order size");
  for (std::size_t p : a.points()) {
    if (p >= f.m()) throw DomainError("verify_witness: point outside [0, m)");
  }
  VerifyReport rep;
  rep.monochromatic = true;
  const auto pts = a.points();
  for (std::size_t i = 0; i < pts.size() && rep.monochromatic; ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Colour x = f(pts[i], pts[j]);
      if (!rep.colour) {
        rep.colour = x;
      } else if (*rep.colour != x) {
        rep.monochromatic = false;
        rep.colour.reset();
        break;
      }
    }
  }
  const auto b = a.gaps();
  rep.gaps_distinct = true;
  rep.order_respected = true;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == j) continue;
      if (b[i] == b[j]) rep.gaps_distinct = false;
      if (ord.precedes(i, j) && !(b[i] < b[j])) rep.order_respected = false;
    }
  }
  rep.overall = rep.monochromatic && rep.gaps_distinct && rep.order_respected;
  return rep;
}

/// Deterministic colouring: slot e receives Rng(seed).below(c) in pair_index order.
inline PairColouring random_colouring(std::size_t m, std::size_t c, std::uint64_t seed) {
  if (m < 2 || c < 1 || c > kMaxColours) throw DomainError("random_colouring: need m >= 2, 1 <= c <= 256");
  Rng rng(seed);
  std::vector<Colour> t(pair_count(m));
  for (auto& x : t) x = static_cast<Colour>(rng.below(c));
  return PairColouring(m, c, std::move(t));
}

}  // namespace gapramsey
