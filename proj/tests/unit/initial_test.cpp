#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "demo/fixtures.hpp"
#include "tracta/errors.hpp"
#include "tracta/initial.hpp"
#include "tracta/valuation.hpp"

using namespace tracta;

namespace {

Element sg(int s, long g) { return ext_elem(sign_elem(s), GammaValue::from_int(g)); }

DirectionU ints(std::initializer_list<long> v) {
  DirectionU u;
  for (long x : v) u.emplace_back(GammaValue::from_int(x));
  return u;
}

PluckerVector random_sval(std::mt19937_64& rng, int r, int n) {
  return tropicalize_matroid(plucker_from_matrix(demo::random_full_rank(rng, r, n)), ValuationKind::Sval,
                             GammaKind::integer());
}

}  // namespace

TEST(Initial, ToricInitialOfRunningExampleAtOrigin) {
  PluckerVector p = demo::pn_valuated(ValuationKind::Sval);
  PluckerVector t = toric_initial(p, demo::rational_direction({"0", "0", "0", "0"}));
  EXPECT_EQ(t.tract(), Tract::sign());
  EXPECT_TRUE(t[Subset::of({2, 3})].is_zero());
  EXPECT_EQ(t[Subset::of({0, 2})], sign_elem(-1));
  EXPECT_TRUE(is_strong_matroid(t));
}

TEST(Initial, ShiftAlongAllOnesDoesNothing) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 30; ++k) {
    PluckerVector p = random_sval(rng, 2, 4);
    DirectionU u = demo::random_int_direction(rng, 4, -3, 3);
    DirectionU v = u;
    for (auto& x : v) x = x + GammaExt(GammaValue::from_int(5));
    EXPECT_EQ(toric_initial(p, u), toric_initial(p, v));
  }
}

TEST(Initial, NonToricDirectionsMakeInfiniteCoordinatesColoops) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 30; ++k) {
    PluckerVector p = random_sval(rng, 2, 5);
    DirectionU u = demo::random_int_direction(rng, 5, -2, 2);
    const int zi = k % 5;
    u[static_cast<std::size_t>(zi)] = GammaExt::infinity();
    InitialMatroid m = initial(p, u);
    const Subset z = Subset::of({zi});
    EXPECT_EQ(m.plucker.rank(), p.rank() - underlying_rank(p, z) + 1);
    for (Subset b : m.plucker.support()) EXPECT_TRUE(z.subset_of(b));
    EXPECT_TRUE(is_strong_matroid(m.plucker));
  }
}

TEST(Initial, RowSpacePointsAreCovectorsOfTheirInitialMatroid) {
  // Field-level oracle: for x in the row space, θ(fval x) lies in the initial degeneration at |fval x|.
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> c(-3, 3), e(-1, 2);
  for (int k = 0; k < 60; ++k) {
    SeriesMatrix a = demo::random_full_rank(rng, 2, 4);
    PluckerVector p = tropicalize_matroid(plucker_from_matrix(a), ValuationKind::Fval, GammaKind::integer());
    std::vector<HahnSeries> x(4);
    for (const auto& row : a) {
      HahnSeries lambda = HahnSeries::monomial(c(rng), e(rng));
      for (std::size_t j = 0; j < 4; ++j) x[j] += lambda * row[j];
    }
    TractVector fx;
    DirectionU u;
    TractVector th;
    for (const auto& s : x) {
      fx.push_back(valuate(ValuationKind::Fval, s, GammaKind::integer()));
      u.push_back(modulus(fx.back()));
      th.push_back(theta(fx.back()));
    }
    if (infinite_part(u) == Subset::full(4)) continue;
    InitialMatroid m = initial(p, u);
    EXPECT_TRUE(is_covector(m.circuits, th)) << to_string(u);
  }
}

TEST(Initial, DualityOfInitials) {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 40; ++k) {
    PluckerVector p = random_sval(rng, 2 + k % 2, 5);
    EXPECT_TRUE(initial_dual_check(p, demo::random_int_direction(rng, 5, -3, 3)));
  }
}

TEST(Initial, InitialCircuitsAgreeOnRandomDirections) {
  std::mt19937_64 rng(25);
  for (int k = 0; k < 40; ++k) {
    PluckerVector p = random_sval(rng, 2, 4);
    DirectionU u = demo::random_int_direction(rng, 4, -2, 2);
    if (k % 3 == 0) u[static_cast<std::size_t>(k % 4)] = GammaExt::infinity();
    EXPECT_NO_THROW(initial_circuits_of(p, u)) << to_string(u);
  }
}

TEST(Initial, WitnessDirectionBreaksTheFailingRelation) {
  // A valuated sign vector whose one three-term relation fails.
  PluckerVector p(Tract::extension(Tract::sign(), GammaKind::integer()), 4, 2);
  auto subs = subsets_of_size(4, 2);
  const int signs[6] = {1, 1, 1, 1, -1, 1};
  const long gammas[6] = {0, 2, 1, 0, 3, 1};
  for (std::size_t i = 0; i < 6; ++i) p.set(subs[i], sg(signs[i], gammas[i]));
  PluckerReport rep = check_plucker(p, Strength::Weak, true);
  ASSERT_FALSE(rep.ok);
  for (const auto& f : rep.failures) {
    DirectionU u = witness_u(p, f.I, f.J);
    PluckerVector t = toric_initial(p, u);
    EXPECT_FALSE(relation_holds(t, t, f.I, f.J));
  }
  ThmAReport a = verify_thmA(p, std::vector<DirectionU>{});
  EXPECT_FALSE(a.weak);
  EXPECT_TRUE(a.witnesses_fail);
}

TEST(Initial, WitnessPreconditions) {
  PluckerVector p = demo::pn_valuated(ValuationKind::Sval, GammaKind::integer());
  EXPECT_THROW(witness_u(p, Subset::of({0}), Subset::of({1, 2, 3})), PreconditionError);
  EXPECT_THROW(witness_u(p, Subset::of({0}), Subset::of({0, 1, 2})), PreconditionError);
  EXPECT_THROW(witness_u(demo::pn_plucker(), Subset::of({0}), Subset::of({1, 2, 3})), PreconditionError);
}

TEST(Initial, TriangleInitialsAreStrongEvenThoughItIsNot) {
  PluckerVector p = demo::triangle_matroid(-1);
  std::vector<DirectionU> us = {ints({0, 0, 0, 0, 0, 0}), ints({1, -1, 0, 2, -2, 0}),
                                ints({0, 0, 0, 0, 1, 1})};
  ThmAReport rep = verify_thmA(p, us);
  EXPECT_TRUE(rep.weak);
  EXPECT_FALSE(rep.strong);
  EXPECT_TRUE(rep.weak_propagates);
  for (const auto& s : rep.samples) EXPECT_TRUE(s.strong) << to_string(s.u);
}

TEST(Initial, DirectionChecks) {
  PluckerVector p = demo::pn_valuated(ValuationKind::Val, GammaKind::integer());
  EXPECT_THROW(initial(p, ints({0, 0, 0})), PreconditionError);
  EXPECT_THROW(toric_initial(p, DirectionU{GammaExt(), GammaValue::from_int(0), GammaValue::from_int(0),
                                           GammaValue::from_int(0)}),
               PreconditionError);
  EXPECT_THROW(initial(p, demo::rational_direction({"1/2", "0", "0", "0"})), TractMismatch);
}

TEST(Initial, GridGuard) {
  std::vector<GammaExt> values = {GammaValue::from_int(0), GammaValue::from_int(1)};
  EXPECT_EQ(direction_grid(3, values).size(), 8u);
  setenv("TRACTA_GUARD", "7", 1);
  EXPECT_THROW(direction_grid(3, values), GuardExceeded);
  unsetenv("TRACTA_GUARD");
}
