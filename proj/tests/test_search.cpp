#include <gtest/gtest.h>

#include <optional>
#include <vector>

#include "gapramsey/core.hpp"
#include "gapramsey/search.hpp"

using namespace gapramsey;

namespace {

// Lexicographic scan over n-subsets, written independently of the library.
std::optional<std::vector<std::size_t>> first_hit(const PairColouring& f, std::size_t n, const GapOrder& ord) {
  const std::size_t m = f.m();
  if (n > m) return std::nullopt;
  std::vector<std::size_t> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = i;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if (n >= 2 && f(a[i], a[j]) != f(a[0], a[1])) ok = false;
      }
    }
    for (std::size_t g = 0; g + 1 < n && ok; ++g) {
      for (std::size_t h = 0; h + 1 < n && ok; ++h) {
        if (g == h) continue;
        const auto bg = a[g + 1] - a[g], bh = a[h + 1] - a[h];
        if (bg == bh || (ord.precedes(g, h) && bg > bh)) ok = false;
      }
    }
    if (ok) return a;
    std::size_t pos = n;
    while (pos > 0 && a[pos - 1] == m - n + pos - 1) --pos;
    if (pos == 0) return std::nullopt;
    ++a[pos - 1];
    for (std::size_t i = pos; i < n; ++i) a[i] = a[i - 1] + 1;
  }
}

std::vector<std::size_t> pts(const Witness& w) { return {w.points().begin(), w.points().end()}; }

}  // namespace

TEST(FindWitness, ConstantColouringExamples) {
  auto f4 = PairColouring::constant(4, 1);
  auto w = find_witness(f4, 3, GapOrder(3, {0, 1}));
  ASSERT_TRUE(w);
  EXPECT_EQ(pts(*w), (std::vector<std::size_t>{0, 1, 3}));
  auto w2 = find_witness(f4, 3, GapOrder(3, {1, 0}));
  ASSERT_TRUE(w2);
  EXPECT_EQ(pts(*w2), (std::vector<std::size_t>{0, 2, 3}));

  auto f3 = PairColouring::constant(3, 1);
  for (const auto& ord : GapOrder::all(3)) EXPECT_FALSE(find_witness(f3, 3, ord));
}

TEST(FindWitness, SinglePointAndOversize) {
  auto f = random_colouring(6, 3, 11);
  auto w = find_witness(f, 1, GapOrder::identity(1));
  ASSERT_TRUE(w);
  EXPECT_EQ(pts(*w), (std::vector<std::size_t>{0}));
  EXPECT_FALSE(find_witness(f, 7, GapOrder::identity(7)));
  EXPECT_THROW(find_witness(f, 0, GapOrder::identity(0)), DomainError);
  EXPECT_THROW(find_witness(f, 3, GapOrder::identity(4)), DomainError);
}

TEST(FindWitnessExhaustive, SameExamples) {
  auto f4 = PairColouring::constant(4, 1);
  EXPECT_EQ(pts(*find_witness_exhaustive(f4, 3, GapOrder(3, {0, 1}))), (std::vector<std::size_t>{0, 1, 3}));
  EXPECT_EQ(pts(*find_witness_exhaustive(f4, 3, GapOrder(3, {1, 0}))), (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_FALSE(find_witness_exhaustive(PairColouring::constant(3, 1), 3, GapOrder::identity(3)));
  EXPECT_EQ(pts(*find_witness_exhaustive(random_colouring(5, 2, 1), 1, GapOrder::identity(1))),
            (std::vector<std::size_t>{0}));
}

TEST(FindWitnessExhaustive, GuardIsEnforced) {
  auto f = PairColouring::constant(60, 1);
  EXPECT_THROW(find_witness_exhaustive(f, 10, GapOrder::identity(10), 1000), SizeGuardError);
}

TEST(FindWitness, MatchesIndependentScan) {
  std::uint64_t seed = 0;
  for (std::size_t c = 1; c <= 3; ++c) {
    for (std::size_t m = 2; m <= 11; ++m) {
      for (std::size_t n = 1; n <= 4; ++n) {
        const auto orders = GapOrder::all(n);
        for (int rep = 0; rep < 20; ++rep) {
          auto f = random_colouring(m, c, ++seed);
          const auto& ord = orders[rep % orders.size()];
          auto fast = find_witness(f, n, ord);
          auto slow = find_witness_exhaustive(f, n, ord);
          auto mine = first_hit(f, n, ord);
          ASSERT_EQ(fast.has_value(), mine.has_value());
          ASSERT_EQ(slow.has_value(), mine.has_value());
          if (mine) {
            ASSERT_EQ(pts(*fast), *mine);
            ASSERT_EQ(pts(*slow), *mine);
          }
        }
      }
    }
  }
}

TEST(FindWitness, SoundOnThousandInstances) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t m = 4 + seed % 9;
    const std::size_t n = 2 + seed % 3;
    auto f = random_colouring(m, 1 + seed % 3, seed);
    const auto orders = GapOrder::all(n);
    const auto& ord = orders[seed % orders.size()];
    if (auto w = find_witness(f, n, ord)) ASSERT_TRUE(verify_witness(f, *w, ord).overall);
  }
}

TEST(FindWitness, RandomExistenceAtM10N4) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto f = random_colouring(10, 2, 5000 + seed);
    const auto orders = GapOrder::all(4);
    const auto& ord = orders[seed % orders.size()];
    EXPECT_EQ(find_witness(f, 4, ord).has_value(), find_witness_exhaustive(f, 4, ord).has_value());
  }
}

TEST(HoldsForAllOrders, Examples) {
  EXPECT_TRUE(holds_for_all_orders(PairColouring::constant(4, 1), 3).holds);
  auto v = holds_for_all_orders(PairColouring::constant(3, 1), 3);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.failing_order);
  EXPECT_EQ(*v.failing_order, GapOrder::identity(3));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_TRUE(holds_for_all_orders(random_colouring(2 + seed % 5, 3, seed), 2).holds);
  }
}

TEST(HoldsForAllOrders, MatchesPerOrderSearch) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto f = random_colouring(8, 2, seed);
    auto v = holds_for_all_orders(f, 4);
    std::optional<GapOrder> first;
    for (const auto& ord : GapOrder::all(4)) {
      if (!first_hit(f, 4, ord)) {
        first = ord;
        break;
      }
    }
    ASSERT_EQ(v.holds, !first.has_value());
    if (first) ASSERT_EQ(*v.failing_order, *first);
  }
}
