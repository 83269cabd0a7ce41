#pragma once

// Witness search: backtracking over a_0 < a_1 < ... with incremental pruning,
// plus the brute-force subset enumeration used as its oracle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gapramsey/core.hpp"
#include "gapramsey/errors.hpp"

namespace gapramsey {

namespace detail {

struct WitnessSearch {
  const PairColouring& f;
  const GapOrder& ord;
  std::size_t n;
  std::vector<std::size_t> pts;
  std::vector<std::size_t> gap;
  Colour colour = 0;

  bool extend(std::size_t k) {
    if (k == n) return true;
    const std::size_t m = f.m();
    const std::size_t lo = pts[k - 1] + 1;
    const std::size_t hi = m - (n - k);  // leave room for the remaining points
    for (std::size_t x = lo; x <= hi; ++x) {
      if (k == 1) {
        colour = f(pts[0], x);
      } else {
        bool same = true;
        for (std::size_t i = 0; i < k && same; ++i) same = f(pts[i], x) == colour;
        if (!same) continue;
      }
      const std::size_t g = x - pts[k - 1];
      const std::size_t gi = k - 1;
      bool ok = true;
      for (std::size_t i = 0; i < gi && ok; ++i) {
        if (gap[i] == g) ok = false;
        else if (ord.precedes(i, gi)) ok = gap[i] < g;
        else ok = g < gap[i];
      }
      if (!ok) continue;
      pts[k] = x;
      gap[gi] = g;
      if (extend(k + 1)) return true;
    }
    return false;
  }
};

inline std::uint64_t binomial_saturating(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (m - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace detail

/// Lexicographically least witness for (f, n, ord), or nullopt.
inline std::optional<Witness> find_witness(const PairColouring& f, std::size_t n, const GapOrder& ord) {
  if (n < 1) throw DomainError("find_witness: n must be at least 1");
  if (ord.n() != n) throw DomainError("find_witness: order size differs from n");
  if (n > f.m()) return std::nullopt;
  detail::WitnessSearch s{f, ord, n, std::vector<std::size_t>(n), std::vector<std::size_t>(n > 1 ? n - 1 : 0)};
  for (std::size_t a0 = 0; a0 + n <= f.m(); ++a0) {
    s.pts[0] = a0;
    if (s.extend(1)) return Witness(s.pts);
  }
  return std::nullopt;
}

inline constexpr std::uint64_t kExhaustiveGuardDefault = 100'000'000;

/// Enumerates all n-subsets in lexicographic order and returns the first that
/// passes verify_witness. Refuses when C(m, n) exceeds the guard.
inline std::optional<Witness> find_witness_exhaustive(const PairColouring& f, std::size_t n, const GapOrder& ord,
                                                      std::uint64_t guard = work_limit(kExhaustiveGuardDefault)) {
  if (n < 1) throw DomainError("find_witness_exhaustive: n must be at least 1");
  if (ord.n() != n) throw DomainError("find_witness_exhaustive: order size differs from n");
  const std::size_t m = f.m();
  if (n > m) return std::nullopt;
  if (detail::binomial_saturating(m, n) > guard) {
    throw SizeGuardError("exhaustive_subsets", "C(m, n) exceeds " + std::to_string(guard));
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    Witness a(idx);
    if (verify_witness(f, a, ord).overall) return a;
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == m - n + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct AllOrdersVerdict {
  bool holds = true;
  std::optional<GapOrder> failing_order;  // first failing order, lexicographic permutation order
};

inline AllOrdersVerdict holds_for_all_orders(const PairColouring& f, std::size_t n) {
  if (n < 1) throw DomainError("holds_for_all_orders: n must be at least 1");
  for (const GapOrder& ord : GapOrder::all(n)) {
    if (!find_witness(f, n, ord)) return {false, ord};
  }
  return {};
}

}  // namespace gapramsey
