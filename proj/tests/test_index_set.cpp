#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "pwitness/index_set.hpp"

using namespace pw;

TEST(IndexSet, Algebra) {
  const IndexSet a = IndexSet::of(4, {0, 2}), b = IndexSet::of(4, {2, 3});
  EXPECT_EQ(a ^ b, IndexSet::of(4, {0, 3}));
  EXPECT_EQ(a & b, IndexSet::of(4, {2}));
  EXPECT_EQ(a | b, IndexSet::of(4, {0, 2, 3}));
  EXPECT_EQ(a - b, IndexSet::of(4, {0}));
  EXPECT_EQ(a.complement(), IndexSet::of(4, {1, 3}));
  EXPECT_EQ(a.with(1).without(0), IndexSet::of(4, {1, 2}));
  EXPECT_EQ(a.flipped(2), IndexSet::of(4, {0}));
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a.front(), 0u);
}

TEST(IndexSet, Printing) {
  const IndexSet a = IndexSet::of(3, {0, 2});
  EXPECT_EQ(a.to_string(), "{1,3}");
  EXPECT_EQ(a.to_bits(), "101");
  EXPECT_EQ(IndexSet::empty(2).to_string(), "{}");
}

TEST(IndexSet, ComplementStaysInDimension) {
  EXPECT_EQ(IndexSet::empty(63).complement(), IndexSet::full(63));
  EXPECT_EQ(IndexSet::full(5).bits(), 31u);
}

TEST(Combinations, LexOrderOfMemberLists) {
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto c = combinations(n, k);
      std::vector<std::vector<std::size_t>> lists;
      for (auto m : c) lists.push_back(IndexSet(n, m).members());
      EXPECT_TRUE(std::is_sorted(lists.begin(), lists.end()));
      EXPECT_EQ(std::set<IndexSet::Mask>(c.begin(), c.end()).size(), c.size());
      for (auto m : c) EXPECT_EQ(static_cast<std::size_t>(std::popcount(m)), k);
      std::size_t binom = 1;
      for (std::size_t i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
      EXPECT_EQ(c.size(), binom);
    }
}

TEST(CubeOrder, SortedBitStrings) {
  EXPECT_EQ(cube_order(2), (std::vector<IndexSet::Mask>{0b00, 0b10, 0b01, 0b11}));
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<std::string> bits;
    for (auto m : cube_order(n)) bits.push_back(IndexSet(n, m).to_bits());
    EXPECT_EQ(bits.size(), std::size_t{1} << n);
    EXPECT_TRUE(std::is_sorted(bits.begin(), bits.end()));
  }
}

TEST(SizeLex, Order) {
  EXPECT_TRUE(size_lex_less(IndexSet::of(3, {2}), IndexSet::of(3, {0, 1})));
  EXPECT_TRUE(size_lex_less(IndexSet::of(3, {0, 2}), IndexSet::of(3, {1, 2})));
  EXPECT_FALSE(size_lex_less(IndexSet::of(3, {1}), IndexSet::of(3, {1})));
}
