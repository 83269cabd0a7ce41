#pragma once

// Finite sequences over [0, base), their meets, lexicographic ranks, and the
// doubling embedding that turns pair colourings of integers into colourings of
// sequences.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "gapramsey/core.hpp"
#include "gapramsey/errors.hpp"

namespace gapramsey {

using Seq = std::vector<std::uint32_t>;

/// Length of the longest common prefix.
inline std::size_t meet_len(const Seq& a, const Seq& b) {
  const std::size_t k = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < k && a[i] == b[i]) ++i;
  return i;
}

/// a is a proper initial segment of b.
inline bool is_proper_prefix(const Seq& a, const Seq& b) {
  return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

/// base^exp, or DomainError on 64-bit overflow.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw DomainError("checked_pow: result exceeds 64 bits");
    }
    r *= base;
  }
  return r;
}

/// Position of `s` among all sequences of its length over [0, base) in
/// lexicographic order, i.e. its value read as a base-`base` numeral.
inline std::uint64_t lex_rank(const Seq& s, std::uint64_t base) {
  if (base == 0) throw DomainError("lex_rank: base must be positive");
  checked_pow(base, s.size());
  std::uint64_t r = 0;
  for (std::uint32_t x : s) {
    if (x >= base) throw DomainError("lex_rank: entry not below base");
    r = r * base + x;
  }
  return r;
}

inline Seq lex_unrank(std::uint64_t rank, std::size_t length, std::uint64_t base) {
  if (base == 0) throw DomainError("lex_unrank: base must be positive");
  if (rank >= checked_pow(base, length)) throw DomainError("lex_unrank: rank out of range");
  Seq s(length);
  for (std::size_t i = length; i-- > 0;) {
    s[i] = static_cast<std::uint32_t>(rank % base);
    rank /= base;
  }
  return s;
}

/// All sequences of `length` over [0, base), in lexicographic order.
inline std::vector<Seq> all_sequences(std::size_t length, std::uint64_t base) {
  const std::uint64_t total = checked_pow(base, length);
  std::vector<Seq> out;
  out.reserve(total);
  for (std::uint64_t r = 0; r < total; ++r) out.push_back(lex_unrank(r, length, base));
  return out;
}

/// (2m-1)^(l-k-1): the least rank distance between two even-coordinate
/// sequences of length l whose meet has length k.
inline std::uint64_t low(std::uint64_t m, std::uint64_t l, std::uint64_t k) {
  if (k >= l) throw DomainError("low: need k < l");
  if (m == 0) throw DomainError("low: need m >= 1");
  return checked_pow(2 * m - 1, l - k - 1);
}

/// (2m-1)^(l-k) - 1: the matching upper bound.
inline std::uint64_t high(std::uint64_t m, std::uint64_t l, std::uint64_t k) {
  if (k >= l) throw DomainError("high: need k < l");
  if (m == 0) throw DomainError("high: need m >= 1");
  return checked_pow(2 * m - 1, l - k) - 1;
}

/// Pointwise doubling: a sequence over [0, m) becomes one over the even
/// numbers {0, 2, ..., 2m-2} of [0, 2m-1).
inline Seq double_embed(const Seq& s) {
  Seq out(s.size());
  std::transform(s.begin(), s.end(), out.begin(), [](std::uint32_t x) { return 2 * x; });
  return out;
}

/// f'({eta, nu}) = f({rank(2 eta), rank(2 nu)}) on length-l sequences over
/// [0, m), where ranks are taken in base 2m-1.
class InducedColouring {
 public:
  InducedColouring(const PairColouring& f, std::size_t length, std::uint64_t m)
      : f_(f), length_(length), m_(m) {
    if (m == 0) throw DomainError("induced_colouring: need m >= 1");
    if (f.m() != checked_pow(2 * m - 1, length)) {
      throw DomainError("induced_colouring: colouring size must be (2m-1)^l");
    }
  }

  std::size_t length() const noexcept { return length_; }
  std::uint64_t m() const noexcept { return m_; }
  std::size_t colours() const noexcept { return f_.c(); }

  std::uint64_t point_of(const Seq& s) const {
    if (s.size() != length_) throw DomainError("induced_colouring: sequence has wrong length");
    for (std::uint32_t x : s) {
      if (x >= m_) throw DomainError("induced_colouring: entry not below m");
    }
    return lex_rank(double_embed(s), 2 * m_ - 1);
  }

  Colour operator()(const Seq& a, const Seq& b) const { return f_(point_of(a), point_of(b)); }

 private:
  PairColouring f_;
  std::size_t length_;
  std::uint64_t m_;
};

inline InducedColouring induced_colouring(const PairColouring& f, std::size_t length, std::uint64_t m) {
  return InducedColouring(f, length, m);
}

}  // namespace gapramsey
