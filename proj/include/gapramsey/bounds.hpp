#pragma once

// The bound values of the double-exponential upper bound, the parameter
// tower m_2, ..., m_{cn}, and the checks relating them. All exact.

#include <cstdint>
#include <vector>

#include "gapramsey/bignat.hpp"
#include "gapramsey/errors.hpp"

namespace gapramsey {

/// 2^((c (n+1)^3)^(n c)), kept in exponent form.
inline PowerForm paper_bound(std::uint64_t n, std::uint64_t c) {
  if (n < 1 || c < 1) throw DomainError("paper_bound: need n, c >= 1");
  BigNat inner = BigNat(c) * pow_small(BigNat(n + 1), 3);
  return {2, pow_small(inner, n * c)};
}

/// m = 2^((n+1)^((c+1) n)).
inline PowerForm lemma3_m(std::uint64_t n, std::uint64_t c) {
  if (n < 1 || c < 1) throw DomainError("lemma3_m: need n, c >= 1");
  return {2, pow_small(BigNat(n + 1), (c + 1) * n)};
}

/// m_2, ..., m_{cn} with m_2 = n^c and m_{j+1} = n^c m_j^(n^c (n+1) + 1).
/// Each term is returned as (n^c)^{e_j}: e_2 = 1, e_{j+1} = 1 + e_j (n^c (n+1) + 1).
inline std::vector<PowerForm> m_sequence(std::uint64_t n, std::uint64_t c) {
  if (n < 1 || c < 1) throw DomainError("m_sequence: need n, c >= 1");
  const BigNat nc = pow_small(BigNat(n), c);
  const BigNat step = nc * (n + 1) + 1;
  std::vector<PowerForm> out;
  BigNat e = 1;
  for (std::uint64_t j = 2; j <= c * n; ++j) {
    out.push_back({nc, e});
    e = 1 + e * step;
  }
  return out;
}

/// m_j <= 2^((n+1)^((c+1) j)) for every j in [2, cn].
inline bool check_mj_bound(std::uint64_t n, std::uint64_t c) {
  const auto seq = m_sequence(n, c);
  for (std::size_t idx = 0; idx < seq.size(); ++idx) {
    const std::uint64_t j = idx + 2;
    BigNat cap = pow_small(BigNat(n + 1), (c + 1) * j);
    if (compare_powers(seq[idx].base, seq[idx].exponent, 2, cap) > 0) return false;
  }
  return true;
}

/// p m^(l k + 1), the least alphabet size the subtree sampler is meant for.
inline BigNat claim2_mstar_min(std::uint64_t k, std::uint64_t l, std::uint64_t m, std::uint64_t p) {
  if (k < 1 || l < 1 || m < 1 || p < 1) throw DomainError("claim2_mstar_min: all arguments must be >= 1");
  return BigNat(p) * pow_small(BigNat(m), l * k + 1);
}

/// (2M - 1)^(n c) <= paper_bound(n, c) with M = lemma3_m(n, c) = 2^L.
/// Since 2^L <= 2M - 1 < 2^(L+1), log2 of the left side lies in
/// [L n c, (L+1) n c); full expansion is only needed inside that window.
inline bool bound_consistency(std::uint64_t n, std::uint64_t c) {
  if (n < 1 || c < 1) throw DomainError("bound_consistency: need n, c >= 1");
  const BigNat L = lemma3_m(n, c).exponent;
  const BigNat P = paper_bound(n, c).exponent;
  const std::uint64_t nc = n * c;
  if ((L + 1) * nc <= P) return true;
  if (L * nc >= P) return false;
  if (L > work_limit(kExpansionGuardBits)) {
    throw SizeGuardError("bound_consistency", "comparison falls inside the undecided window");
  }
  BigNat two_m_minus_1 = (BigNat(1) << L.convert_to<unsigned>()) * 2 - 1;
  return compare_powers(two_m_minus_1, nc, 2, P) <= 0;
}

/// r <= paper_bound(n, c).
inline bool within_paper_bound(std::uint64_t r, std::uint64_t n, std::uint64_t c) {
  return compare_powers(r, 1, 2, paper_bound(n, c).exponent) <= 0;
}

}  // namespace gapramsey
