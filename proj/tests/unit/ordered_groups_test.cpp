#include <gtest/gtest.h>

#include <random>

#include "tracta/errors.hpp"
#include "tracta/gamma.hpp"
#include "tracta/rational.hpp"

using namespace tracta;

TEST(Rational, ParsesCanonically) {
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_TRUE(is_integer(parse_rational("8/4")));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "1/2/3", "+1", " 1", "a"}) {
    EXPECT_THROW(parse_rational(bad), SchemaError) << bad;
  }
}

TEST(Rational, PowersOfTwo) {
  EXPECT_EQ(pow2(3), Rational(8));
  EXPECT_EQ(pow2(-2), Rational(1, 4));
  EXPECT_EQ(pow2(0), Rational(1));
}

TEST(Gamma, LexOrderComparesComponentsInTurn) {
  GammaValue a({Rational(1), Rational(5)});
  GammaValue b({Rational(2), Rational(-7)});
  GammaValue c({Rational(1), Rational(6)});
  EXPECT_LT(a, b);
  EXPECT_LT(a, c);
  EXPECT_LT(c, b);
  EXPECT_EQ(a + b, GammaValue({Rational(3), Rational(-2)}));
}

TEST(Gamma, WidthMismatchIsATractMismatch) {
  GammaValue a({Rational(1), Rational(0)});
  GammaValue b(Rational(1));
  EXPECT_THROW((void)(a + b), TractMismatch);
  EXPECT_THROW((void)(a < b), TractMismatch);
}

TEST(Gamma, KindChecks) {
  EXPECT_NO_THROW(GammaValue(Rational(3)).check_kind(GammaKind::integer()));
  EXPECT_THROW(GammaValue(Rational(1, 2)).check_kind(GammaKind::integer()), TractMismatch);
  EXPECT_NO_THROW(GammaValue(Rational(1, 2)).check_kind(GammaKind::rational()));
  EXPECT_THROW(GammaValue(Rational(1)).check_kind(GammaKind::lex(2)), TractMismatch);
  EXPECT_THROW(GammaKind::lex(0), PreconditionError);
}

TEST(Gamma, InfinityAbsorbsAndDominates) {
  GammaExt inf = GammaExt::infinity();
  GammaExt two(GammaValue::from_int(2));
  EXPECT_TRUE((inf + two).is_infinite());
  EXPECT_GT(inf, two);
  EXPECT_EQ(inf, GammaExt::infinity());
  EXPECT_EQ(gamma_min(inf, two), two);
  EXPECT_THROW(inf.negated(), PreconditionError);
  EXPECT_EQ(two.negated(), GammaExt(GammaValue::from_int(-2)));
  EXPECT_EQ(inf.to_string(), "inf");
}

TEST(Gamma, ArgminSet) {
  std::vector<GammaExt> xs = {GammaValue::from_int(3), GammaValue::from_int(1), GammaExt::infinity(),
                              GammaValue::from_int(1)};
  EXPECT_EQ(argmin_set(xs), (std::vector<std::size_t>{1, 3}));
  std::vector<GammaExt> all_inf(3);
  EXPECT_TRUE(argmin_set(all_inf).empty());
}

TEST(Gamma, OrderIsCompatibleWithAddition) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-6, 6);
  auto draw = [&] { return GammaValue({Rational(d(rng), 2), Rational(d(rng))}); };
  for (int i = 0; i < 500; ++i) {
    GammaValue a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a <= b, a + c <= b + c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_TRUE((a - a).is_zero());
    // totality and antisymmetry
    EXPECT_TRUE(a <= b || b <= a);
    if (a <= b && b <= a) {
      EXPECT_EQ(a, b);
    }
  }
}
