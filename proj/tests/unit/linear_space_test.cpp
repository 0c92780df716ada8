#include <gtest/gtest.h>

#include <random>

#include "demo/fixtures.hpp"
#include "tracta/errors.hpp"
#include "tracta/linear_space.hpp"
#include "tracta/valuation.hpp"

using namespace tracta;

namespace {

std::vector<GammaExt> values(std::initializer_list<long> v, bool inf) {
  std::vector<GammaExt> out;
  for (long x : v) out.emplace_back(GammaValue::from_int(x));
  if (inf) out.push_back(GammaExt::infinity());
  return out;
}

}  // namespace

TEST(LinearSpace, GridEnumerationOrder) {
  const Tract sz = Tract::extension(Tract::sign(), GammaKind::integer());
  SampleGrid g = uniform_grid(2, values({0}, true), finite_units(Tract::sign()));
  auto pts = grid_points(sz, g);
  ASSERT_EQ(pts.size(), 9u);
  EXPECT_EQ(grid_size(g), 9u);
  // The last coordinate varies fastest.
  EXPECT_EQ(pts[0][0], pts[1][0]);
  EXPECT_FALSE(pts[0][1] == pts[1][1]);
  EXPECT_FALSE(default_scalar_domain(Tract::extension(Tract::hahn(), GammaKind::integer()), g).has_value());
  EXPECT_TRUE(default_scalar_domain(sz, g).has_value());
}

TEST(LinearSpace, CharacterisationsAgreeOnRandomSignedMatroids) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 6; ++k) {
    PluckerVector p = tropicalize_matroid(plucker_from_matrix(demo::random_full_rank(rng, 2, 4)),
                                          ValuationKind::Sval, GammaKind::integer());
    SampleGrid g = uniform_grid(4, values({-1, 0}, true), finite_units(Tract::sign()));
    std::size_t members = 0;
    for (const auto& v : enumerate_linear_space(p, g)) {
      EXPECT_TRUE(v.agree()) << to_string(p.tract(), v.point);
      ASSERT_TRUE(v.charD.has_value());
      EXPECT_EQ(nonconformal_test(p, v.point), v.charB);
      members += v.charB;
    }
    EXPECT_GT(members, 1u);  // the zero vector and more
  }
}

TEST(LinearSpace, KrasnerSpecialisations) {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 6; ++k) {
    PluckerVector p = tropicalize_matroid(plucker_from_matrix(demo::random_full_rank(rng, 2, 4)),
                                          ValuationKind::Val, GammaKind::integer());
    CircuitSet cc = cocircuits(p);
    SampleGrid g = uniform_grid(4, values({-1, 0, 1, 2}, true), finite_units(Tract::krasner()));
    LinearSpace ls(p);
    for (const auto& x : grid_points(p.tract(), g)) {
      const bool b = ls.charB(x);
      EXPECT_EQ(ls.charA(x), b);
      EXPECT_EQ(ls.charC(x), b);
      EXPECT_EQ(initial_loopless(p, x), b);
      EXPECT_EQ(tspan_member_K(cc, x), b);
    }
  }
}

TEST(LinearSpace, ValuatedRowSpaceIsContained) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> c(1, 3), e(-1, 2);
  for (ValuationKind kind : {ValuationKind::Val, ValuationKind::Sval, ValuationKind::Fval}) {
    for (int k = 0; k < 10; ++k) {
      SeriesMatrix a = demo::random_full_rank(rng, 2, 5);
      LinearSpace ls(tropicalize_matroid(plucker_from_matrix(a), kind, GammaKind::integer()));
      for (int s = 0; s < 10; ++s) {
        std::vector<HahnSeries> x(5);
        for (const auto& row : a) {
          HahnSeries lambda = HahnSeries::monomial(rng() % 2 ? c(rng) : -c(rng), e(rng));
          for (std::size_t j = 0; j < 5; ++j) x[j] += lambda * row[j];
        }
        TractVector v;
        for (const auto& y : x) v.push_back(valuate(kind, y, GammaKind::integer()));
        EXPECT_TRUE(ls.charB(v));
        EXPECT_TRUE(ls.charC(v));
      }
    }
  }
}

TEST(LinearSpace, RunningExampleMembers) {
  PluckerVector p = demo::pn_valuated(ValuationKind::Val, GammaKind::integer());
  LinearSpace ls(p);
  auto k = [](long g) { return ext_elem(krasner_one(), GammaValue::from_int(g)); };
  EXPECT_TRUE(ls.charB(TractVector{k(1), k(0), k(0), k(0)}));    // ray [1]
  EXPECT_TRUE(ls.charB(TractVector{k(0), k(0), k(1), k(1)}));    // vertex [6]
  EXPECT_TRUE(ls.charB(TractVector{Element(), k(0), k(0), k(0)}));
  EXPECT_FALSE(ls.charB(TractVector{k(0), k(1), k(0), k(1)}));
  EXPECT_FALSE(ls.charB(TractVector{Element(), Element(), k(0), k(0)}));
}

TEST(LinearSpace, Preconditions) {
  EXPECT_THROW(LinearSpace(demo::pn_plucker()), PreconditionError);
  PluckerVector p = demo::pn_valuated(ValuationKind::Sval, GammaKind::integer());
  SampleGrid g = uniform_grid(4, values({-3, -2, -1, 0, 1, 2, 3}, true), finite_units(Tract::sign()));
  setenv("TRACTA_GUARD", "1000", 1);
  EXPECT_THROW(enumerate_linear_space(p, g), GuardExceeded);
  unsetenv("TRACTA_GUARD");
}
