#pragma once

// Exact natural-number arithmetic for the bound values. Values too large to
// expand are kept as base^exponent and compared through bracketed log2
// estimates that are refined until the comparison is decided.

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "gapramsey/errors.hpp"

namespace gapramsey {

using BigNat = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kExpansionGuardBits = std::uint64_t{1} << 24;

/// Number of bits in x (0 for x = 0).
inline std::uint64_t bit_length(const BigNat& x) {
  return x == 0 ? 0 : static_cast<std::uint64_t>(boost::multiprecision::msb(x)) + 1;
}

inline bool is_power_of_two(const BigNat& x) {
  return x > 0 && boost::multiprecision::lsb(x) == boost::multiprecision::msb(x);
}

/// x^e for a small exponent.
inline BigNat pow_small(const BigNat& x, std::uint64_t e) {
  return boost::multiprecision::pow(x, static_cast<unsigned>(e));
}

/// An exact natural number written as base^exponent.
struct PowerForm {
  BigNat base;
  BigNat exponent;

  /// log2 of the value when the base is a power of two.
  BigNat log2() const {
    if (!is_power_of_two(base)) throw DomainError("PowerForm::log2: base is not a power of two");
    return exponent * (bit_length(base) - 1);
  }

  /// Full decimal expansion, refused above `max_bits` bits.
  BigNat expand(std::uint64_t max_bits = work_limit(kExpansionGuardBits)) const {
    if (exponent == 0) return 1;
    if (base <= 1) return base;
    BigNat bits = exponent * bit_length(base);
    if (bits > max_bits) {
      throw SizeGuardError("bignat_expansion", "value has about " + bits.str() + " bits");
    }
    return pow_small(base, exponent.convert_to<std::uint64_t>());
  }
};

namespace detail {

inline std::strong_ordering order_of(const BigNat& l, const BigNat& r) {
  if (l < r) return std::strong_ordering::less;
  if (r < l) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Lower/upper bound numerators for q * e * log2(x) at precision 1/q.
// `exact` marks that lo == hi is the true value.
struct LogBracket {
  BigNat lo;
  BigNat hi;
  bool exact;
};

inline LogBracket scaled_log(const BigNat& x_pow_q, std::uint64_t q, const BigNat& e, bool pow2,
                             std::uint64_t s) {
  if (pow2) {
    BigNat v = e * s * q;
    return {v, v, true};
  }
  const std::uint64_t f = bit_length(x_pow_q) - 1;
  return {e * f, e * (f + 1), false};
}

}  // namespace detail

/// Exact three-way comparison of x^a with y^b.
inline std::strong_ordering compare_powers(const BigNat& x, const BigNat& a, const BigNat& y, const BigNat& b,
                                           std::uint64_t guard_bits = work_limit(kExpansionGuardBits)) {
  // Collapse trivial values to 0 or 1.
  auto trivial = [](const BigNat& base, const BigNat& e) -> int {
    if (e == 0 || base == 1) return 1;
    if (base == 0) return 0;
    return -1;
  };
  const int tx = trivial(x, a);
  const int ty = trivial(y, b);
  if (tx >= 0 && ty >= 0) return tx <=> ty;
  if (tx >= 0) return std::strong_ordering::less;  // y^b >= 2
  if (ty >= 0) return std::strong_ordering::greater;

  const bool px = is_power_of_two(x);
  const bool py = is_power_of_two(y);
  const std::uint64_t sx = bit_length(x) - 1;
  const std::uint64_t sy = bit_length(y) - 1;
  if (px && py) {
    return detail::order_of(a * sx, b * sy);
  }

  BigNat xq = x;
  BigNat yq = y;
  for (std::uint64_t q = 1;; q *= 2) {
    auto A = detail::scaled_log(xq, q, a, px, sx);
    auto B = detail::scaled_log(yq, q, b, py, sy);
    if (A.hi <= B.lo) return std::strong_ordering::less;  // at least one side is strict
    if (B.hi <= A.lo) return std::strong_ordering::greater;
    if (2 * bit_length(xq) > guard_bits || 2 * bit_length(yq) > guard_bits) break;
    if (!px) xq *= xq;
    if (!py) yq *= yq;
  }
  // Undecided by refinement (typically equal values such as 9^1 vs 3^2).
  BigNat lbits = a * bit_length(x);
  BigNat rbits = b * bit_length(y);
  if (lbits > guard_bits || rbits > guard_bits) {
    throw SizeGuardError("bignat_compare", "comparison needs full expansion beyond the guard");
  }
  return detail::order_of(pow_small(x, a.convert_to<std::uint64_t>()),
                          pow_small(y, b.convert_to<std::uint64_t>()));
}

inline std::strong_ordering compare(const PowerForm& l, const PowerForm& r) {
  return compare_powers(l.base, l.exponent, r.base, r.exponent);
}

}  // namespace gapramsey
