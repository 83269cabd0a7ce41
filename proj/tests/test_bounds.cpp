#include <gtest/gtest.h>

#include <compare>
#include <cstdint>

#include "gapramsey/bignat.hpp"
#include "gapramsey/bounds.hpp"
#include "gapramsey/rng.hpp"

using namespace gapramsey;

namespace {

BigNat naive_pow(BigNat x, std::uint64_t e) {
  BigNat r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

TEST(ClosedFormBound, Examples) {
  EXPECT_EQ(paper_bound(2, 1).base, 2);
  EXPECT_EQ(paper_bound(2, 1).exponent, 729);
  EXPECT_EQ(paper_bound(1, 1).exponent, 8);
  EXPECT_EQ(paper_bound(3, 2).exponent, naive_pow(128, 6));
  EXPECT_EQ(paper_bound(3, 2).log2(), naive_pow(128, 6));
  EXPECT_EQ(paper_bound(1, 1).expand(), 256);
  EXPECT_THROW(paper_bound(3, 2).expand(), SizeGuardError);
  EXPECT_THROW(paper_bound(0, 1), DomainError);
}

TEST(AlphabetFormula, Examples) {
  EXPECT_EQ(lemma3_m(2, 1).exponent, 81);
  EXPECT_EQ(lemma3_m(1, 1).exponent, 4);
  EXPECT_EQ(lemma3_m(3, 2).exponent, 262144);  // 4^9
  EXPECT_EQ(lemma3_m(1, 1).expand(), 16);
}

TEST(MSequence, Examples) {
  auto s32 = m_sequence(3, 2);
  ASSERT_EQ(s32.size(), 5u);
  EXPECT_EQ(s32[0].expand(), 9);
  EXPECT_EQ(s32[1].base, 9);
  EXPECT_EQ(s32[1].exponent, 38);
  auto s21 = m_sequence(2, 1);
  ASSERT_EQ(s21.size(), 1u);
  EXPECT_EQ(s21[0].expand(), 2);
  auto s31 = m_sequence(3, 1);
  ASSERT_EQ(s31.size(), 2u);
  EXPECT_EQ(s31[0].expand(), 3);
  EXPECT_EQ(s31[1].base, 3);
  EXPECT_EQ(s31[1].exponent, 14);
  EXPECT_TRUE(m_sequence(1, 1).empty());
}

TEST(MSequence, RecurrenceByDirectExpansion) {
  for (std::uint64_t n = 2; n <= 3; ++n) {
    for (std::uint64_t c = 1; c <= 2; ++c) {
      auto s = m_sequence(n, c);
      const BigNat nc = naive_pow(n, c);
      BigNat mj = nc;
      const std::uint64_t e = static_cast<std::uint64_t>(nc) * (n + 1) + 1;
      for (std::size_t j = 0; j < s.size() && j < 3; ++j) {
        ASSERT_EQ(s[j].expand(), mj) << "n=" << n << " c=" << c << " j=" << j + 2;
        mj = nc * naive_pow(mj, e);
      }
    }
  }
}

TEST(CheckMjBound, Sweep) {
  EXPECT_TRUE(check_mj_bound(3, 2));
  EXPECT_TRUE(check_mj_bound(2, 1));
  for (std::uint64_t n = 1; n <= 5; ++n) {
    for (std::uint64_t c = 1; c <= 3; ++c) EXPECT_TRUE(check_mj_bound(n, c)) << n << " " << c;
  }
}

TEST(SamplingAlphabetMin, Examples) {
  EXPECT_EQ(claim2_mstar_min(2, 2, 2, 1), 32);
  EXPECT_EQ(claim2_mstar_min(1, 1, 2, 1), 4);
  EXPECT_EQ(claim2_mstar_min(2, 3, 2, 2), 256);
  EXPECT_THROW(claim2_mstar_min(0, 1, 1, 1), DomainError);
}

TEST(BoundConsistency, Examples) {
  EXPECT_TRUE(bound_consistency(2, 1));
  EXPECT_TRUE(bound_consistency(3, 1));
  EXPECT_TRUE(bound_consistency(3, 2));
  for (std::uint64_t n = 1; n <= 4; ++n) {
    for (std::uint64_t c = 1; c <= 2; ++c) EXPECT_TRUE(bound_consistency(n, c)) << n << " " << c;
  }
}

TEST(BoundConsistency, SmallCaseByExpansion) {
  // n = c = 1: M = 2^4, (2M - 1)^1 = 31 <= 2^8.
  EXPECT_LE(BigNat(2 * lemma3_m(1, 1).expand() - 1), paper_bound(1, 1).expand());
}

TEST(ComparePowers, MatchesExpansion) {
  Rng rng(42);
  for (int it = 0; it < 3000; ++it) {
    const BigNat x = 1 + rng.below(300), y = 1 + rng.below(300);
    const std::uint64_t a = rng.below(40), b = rng.below(40);
    const auto want = detail::order_of(naive_pow(x, a), naive_pow(y, b));
    ASSERT_EQ(compare_powers(x, a, y, b), want) << x << "^" << a << " vs " << y << "^" << b;
  }
}

TEST(ComparePowers, NearTies) {
  EXPECT_EQ(compare_powers(8, 3, 2, 9), std::strong_ordering::equal);
  EXPECT_EQ(compare_powers(3, 40, 2, 63), std::strong_ordering::greater);  // 3^40 ~ 2^63.4
  EXPECT_EQ(compare_powers(3, 40, 2, 64), std::strong_ordering::less);
  EXPECT_EQ(compare_powers(0, 5, 1, 5), std::strong_ordering::less);
  EXPECT_EQ(compare_powers(7, 0, 1, 9), std::strong_ordering::equal);
  // Huge exponents decided without expansion.
  EXPECT_EQ(compare_powers(3, naive_pow(10, 30), 2, naive_pow(10, 30) * 2), std::strong_ordering::less);
  EXPECT_EQ(compare_powers(4, naive_pow(10, 30), 2, naive_pow(10, 30) * 2), std::strong_ordering::equal);
}

TEST(ThresholdBelowBound, Basics) {
  EXPECT_TRUE(within_paper_bound(256, 1, 1));
  EXPECT_FALSE(within_paper_bound(257, 1, 1));
  EXPECT_TRUE(within_paper_bound(15, 3, 2));
}

TEST(BigNatHelpers, Basics) {
  EXPECT_EQ(bit_length(0), 0u);
  EXPECT_EQ(bit_length(255), 8u);
  EXPECT_TRUE(is_power_of_two(1024));
  EXPECT_FALSE(is_power_of_two(0));
  EXPECT_FALSE(is_power_of_two(12));
  EXPECT_EQ(pow_small(3, 4), 81);
  EXPECT_EQ(compare(PowerForm{2, 10}, PowerForm{32, 2}), std::strong_ordering::equal);
}
