#include <gtest/gtest.h>

#include <set>

#include "tracta/errors.hpp"
#include "tracta/subset.hpp"

using namespace tracta;

TEST(Subset, OneBasedParsing) {
  EXPECT_EQ(Subset::from_one_based({1, 3}), Subset::of({0, 2}));
  EXPECT_THROW(Subset::from_one_based({0}), SchemaError);
  EXPECT_THROW(Subset::from_one_based({2, 2}), SchemaError);
  EXPECT_THROW(Subset::from_one_based({17}), SchemaError);
  EXPECT_EQ(to_string(Subset::of({4, 5})), "{5,6}");
}

TEST(Subset, EnumerationIsLexicographicAndComplete) {
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto subs = subsets_of_size(n, k);
      EXPECT_EQ(subs.size(), binomial(n, k));
      for (std::size_t i = 1; i < subs.size(); ++i) EXPECT_TRUE(lex_less(subs[i - 1], subs[i]));
      std::set<std::size_t> ranks;
      for (Subset s : subs) {
        EXPECT_EQ(s.size(), k);
        ranks.insert(colex_rank(s));
      }
      // colex ranks are a bijection onto [0, C(n,k))
      EXPECT_EQ(ranks.size(), subs.size());
      if (!ranks.empty()) EXPECT_EQ(*ranks.rbegin(), subs.size() - 1);
    }
  }
}

TEST(Subset, CrossingInversionsIsTheSortParity) {
  for (std::uint32_t a = 0; a < 64; ++a) {
    for (std::uint32_t b = 0; b < 64; ++b) {
      if (a & b) continue;
      // concatenate A then B and count inversions directly
      std::vector<int> seq = Subset{a}.elements();
      for (int x : Subset{b}.elements()) seq.push_back(x);
      int inv = 0;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) inv += seq[i] > seq[j];
      }
      EXPECT_EQ(crossing_inversions(Subset{a}, Subset{b}), inv);
    }
  }
}

TEST(Subset, SetOperations) {
  Subset a = Subset::of({0, 2, 3}), b = Subset::of({2, 5});
  EXPECT_EQ(a | b, Subset::of({0, 2, 3, 5}));
  EXPECT_EQ(a & b, Subset::of({2}));
  EXPECT_EQ(a - b, Subset::of({0, 3}));
  EXPECT_EQ(complement(a, 6), Subset::of({1, 4, 5}));
  EXPECT_TRUE(Subset::of({2}).subset_of(a));
  EXPECT_EQ(a.one_based(), (std::vector<int>{1, 3, 4}));
}
