#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tracta/errors.hpp"
#include "tracta/series.hpp"

using namespace tracta;

namespace {

HahnSeries random_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 3), num(-4, 4), ex(-2, 4);
  HahnSeries out;
  for (int i = terms(rng); i > 0; --i) out += HahnSeries::monomial(num(rng), Rational(ex(rng), 2));
  return out;
}

/// Leibniz formula over all permutations.
HahnSeries leibniz(const SeriesMatrix& m) {
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  HahnSeries det;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    HahnSeries term(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < perm.size(); ++i) term = term * m[i][static_cast<std::size_t>(perm[i])];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST(Series, TermsAreCombinedAndSorted) {
  HahnSeries s({{Rational(2), Rational(1)}, {Rational(0), Rational(3)}, {Rational(2), Rational(-1)}});
  ASSERT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.leading_exp(), Rational(0));
  EXPECT_EQ(s.leading_coeff(), Rational(3));
  EXPECT_TRUE(HahnSeries(0).is_zero());
}

TEST(Series, Printing) {
  const HahnSeries t = HahnSeries::t();
  EXPECT_EQ((HahnSeries(1) - t).to_string(), "1-t");
  EXPECT_EQ(t.scaled(2).to_string(), "2t");
  EXPECT_EQ(HahnSeries::monomial(2, Rational(1, 2)).to_string(), "2t^1/2");
  EXPECT_EQ(HahnSeries().to_string(), "0");
  EXPECT_EQ(HahnSeries::monomial(-1, -1).to_string(), "-t^-1");
}

TEST(Series, MonomialInverse) {
  HahnSeries m = HahnSeries::monomial(Rational(2, 3), Rational(-1, 2));
  EXPECT_EQ(m * m.monomial_inverse(), HahnSeries(1));
  EXPECT_THROW((HahnSeries(1) - HahnSeries::t()).monomial_inverse(), PreconditionError);
  EXPECT_THROW(HahnSeries().leading_exp(), PreconditionError);
}

TEST(Series, RingLaws) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    HahnSeries a = random_series(rng), b = random_series(rng), c = random_series(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).leading_exp(), a.leading_exp() + b.leading_exp());
      EXPECT_EQ((a * b).leading_coeff(), a.leading_coeff() * b.leading_coeff());
    }
  }
}

TEST(Series, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < 20; ++k) {
      SeriesMatrix m(static_cast<std::size_t>(n));
      for (auto& row : m) {
        for (int j = 0; j < n; ++j) row.push_back(random_series(rng));
      }
      EXPECT_EQ(determinant(m), leibniz(m));
    }
  }
}
