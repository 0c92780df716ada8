#include <gtest/gtest.h>

#include <vector>

#include "tracta/errors.hpp"
#include "tracta/tract.hpp"

using namespace tracta;

namespace {

Element sg(int s, long g) { return ext_elem(sign_elem(s), GammaValue::from_int(g)); }
Element vq(long p, long q = 1) { return rational_elem(Rational(p, q)); }

std::vector<Tract> all_tracts() {
  std::vector<Tract> out = {Tract::krasner(), Tract::sign(),   Tract::triangle(), Tract::regular(),
                            Tract::dyadic(),  Tract::hahn(),   Tract::rationals()};
  const std::size_t base = out.size();
  for (std::size_t i = 0; i < base; ++i) {
    out.push_back(Tract::extension(out[i], GammaKind::integer()));
  }
  out.push_back(Tract::extension(Tract::sign(), GammaKind::lex(2)));
  return out;
}

/// Signed tropical hypersum, written out case by case.
bool signed_tropical_contains(const Element& a, const Element& b, const Element& c) {
  auto sgn = [](const Element& e) { return std::get<SignUnit>(theta(e).base()).s; };
  if (b.is_zero()) return a == c;
  if (c.is_zero()) return a == b;
  if (b.gamma() < c.gamma()) return a == b;
  if (c.gamma() < b.gamma()) return a == c;
  if (sgn(b) == sgn(c)) return a == b;
  return a.is_zero() || !(a.gamma() < b.gamma());
}

}  // namespace

TEST(Tract, KrasnerTable) {
  const Tract k = Tract::krasner();
  const Element z, o = krasner_one();
  EXPECT_TRUE(hypersum_contains(k, o, o, o));
  EXPECT_TRUE(hypersum_contains(k, z, o, o));
  EXPECT_TRUE(hypersum_contains(k, o, o, z));
  EXPECT_FALSE(hypersum_contains(k, z, o, z));
  EXPECT_FALSE(hypersum_contains(k, o, z, z));
  EXPECT_TRUE(hypersum_contains(k, z, z, z));
}

TEST(Tract, SignTable) {
  const Tract s = Tract::sign();
  const Element z, p = sign_elem(1), m = sign_elem(-1);
  EXPECT_TRUE(hypersum_contains(s, p, p, p));
  EXPECT_FALSE(hypersum_contains(s, m, p, p));
  EXPECT_FALSE(hypersum_contains(s, z, p, p));
  for (const auto& a : {z, p, m}) EXPECT_TRUE(hypersum_contains(s, a, p, m));
  EXPECT_TRUE(hypersum_contains(s, m, m, z));
  EXPECT_EQ(neg(s, p), m);
}

TEST(Tract, TriangleHyperfieldMatchesIntervalOracle) {
  const Tract v = Tract::triangle();
  std::vector<Rational> xs = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3),
                              Rational(7, 2)};
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      for (const auto& c : xs) {
        const Rational lo = abs(b - c), hi = b + c;
        const bool oracle = lo <= a && a <= hi;
        EXPECT_EQ(hypersum_contains(v, rational_elem(a), rational_elem(b), rational_elem(c)), oracle)
            << a << " in " << b << " + " << c;
      }
    }
    EXPECT_TRUE(hypersum_contains(v, rational_elem(a), rational_elem(a), Element()));
    EXPECT_FALSE(hypersum_contains(v, Element(), rational_elem(a), Element()));
  }
  EXPECT_EQ(neg(v, vq(3)), vq(3));
  EXPECT_THROW(validate(v, vq(-1)), TractMismatch);
}

TEST(Tract, DyadicNullSumsAreZeroRationalSums) {
  const Tract d = Tract::dyadic();
  std::vector<Element> units;
  for (int s : {1, -1}) {
    for (long k : {-1L, 0L, 1L, 2L}) units.push_back(dyadic_elem(s, k));
  }
  auto value = [](const Element& e) -> Rational {
    const auto& u = std::get<DyadicUnit>(e.base());
    return u.sign * pow2(u.exp);
  };
  for (const auto& a : units) {
    for (const auto& b : units) {
      for (const auto& c : units) {
        std::vector<Element> sum = {a, b, c};
        EXPECT_EQ(is_null(d, sum), value(a) + value(b) + value(c) == 0);
        std::vector<Element> pair = {a, b};
        EXPECT_EQ(is_null(d, pair), value(a) + value(b) == 0);
      }
    }
  }
}

TEST(Tract, RegularPartialFieldNullSums) {
  const Tract u = Tract::regular();
  const Element p = sign_elem(1), m = sign_elem(-1);
  EXPECT_TRUE(is_null(u, std::vector<Element>{p, m}));
  EXPECT_FALSE(is_null(u, std::vector<Element>{p, p, m}));
  EXPECT_TRUE(is_null(u, std::vector<Element>{p, p, m, m}));
  EXPECT_FALSE(is_null(u, std::vector<Element>{p, p}));
}

TEST(Tract, HahnAndRationalNullSums) {
  const HahnSeries t = HahnSeries::t();
  EXPECT_TRUE(is_null(Tract::hahn(), std::vector<Element>{series_elem(HahnSeries(1) - t),
                                                          series_elem(t), series_elem(HahnSeries(-1))}));
  EXPECT_FALSE(is_null(Tract::hahn(), std::vector<Element>{series_elem(t), series_elem(HahnSeries(-1))}));
  EXPECT_TRUE(is_null(Tract::rationals(), std::vector<Element>{vq(1, 2), vq(1, 2), vq(-1)}));
}

TEST(Tract, SignedTropicalExtensionMatchesCaseAnalysis) {
  const Tract st = Tract::extension(Tract::sign(), GammaKind::integer());
  std::vector<Element> elems = {Element()};
  for (int s : {1, -1}) {
    for (long g : {-1L, 0L, 1L}) elems.push_back(sg(s, g));
  }
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      for (const auto& c : elems) {
        EXPECT_EQ(hypersum_contains(st, a, b, c), signed_tropical_contains(a, b, c))
            << to_string(st, a) << " in " << to_string(st, b) << " + " << to_string(st, c);
      }
    }
  }
}

TEST(Tract, ExtensionNullTestUsesOnlyMinimalTerms) {
  const Tract kz = Tract::extension(Tract::krasner(), GammaKind::integer());
  auto k = [](long g) { return ext_elem(krasner_one(), GammaValue::from_int(g)); };
  EXPECT_TRUE(is_null(kz, std::vector<Element>{k(0), k(0), k(5)}));
  EXPECT_FALSE(is_null(kz, std::vector<Element>{k(0), k(1), k(1)}));
  EXPECT_TRUE(is_null(kz, std::vector<Element>{Element(), k(2), k(2)}));
}

TEST(Tract, AxiomsHoldOnSampledUnits) {
  for (const auto& t : all_tracts()) {
    auto units = sample_units(t);
    AxiomReport rep = check_tract_axioms(t, units, 3);
    EXPECT_TRUE(rep.ok) << t.name() << " " << rep.failed_axiom << " " << rep.witness;
  }
}

TEST(Tract, AxiomCheckerRejectsBrokenNullSets) {
  const Tract s = Tract::sign();
  auto units = sample_units(s);
  // Every two-term sum null: 1 would have two additive inverses.
  AxiomReport two = check_tract_axioms(s, units, 3, [](std::span<const Element> x) {
    return x.empty() || x.size() >= 2;
  });
  EXPECT_FALSE(two.ok);
  EXPECT_EQ(two.failed_axiom, "T3");
  // Not closed under scaling.
  AxiomReport scaled = check_tract_axioms(s, units, 3, [](std::span<const Element> x) {
    if (x.empty()) return true;
    return x.size() == 2 && std::get<SignUnit>(x[0].base()).s == 1 && !(x[0] == x[1]);
  });
  EXPECT_FALSE(scaled.ok);
  AxiomReport single = check_tract_axioms(s, units, 3, [](std::span<const Element>) { return true; });
  EXPECT_EQ(single.failed_axiom, "T2");
}

TEST(Tract, GroupLawsOnSamples) {
  for (const auto& t : all_tracts()) {
    auto units = sample_units(t);
    for (const auto& a : units) {
      EXPECT_EQ(mul(t, a, one(t)), a) << t.name();
      const bool invertible = t.base_kind() != TractKind::HahnField || std::get<HahnSeries>(a.base()).is_monomial();
      if (invertible) EXPECT_EQ(mul(t, a, inv(t, a)), one(t)) << t.name() << " " << to_string(t, a);
      else EXPECT_THROW(inv(t, a), PreconditionError);
      EXPECT_EQ(neg(t, neg(t, a)), a);
      EXPECT_EQ(conj(t, a), a);
      const Element canon = mul(t, normalizer(t, a), a);
      for (const auto& b : units) {
        EXPECT_EQ(mul(t, a, b), mul(t, b, a));
        if (!invertible) continue;
        const Element ab = mul(t, a, b);
        EXPECT_EQ(mul(t, normalizer(t, ab), ab), mul(t, normalizer(t, b), b)) << to_string(t, ab);
      }
      EXPECT_EQ(mul(t, normalizer(t, canon), canon), canon) << to_string(t, canon);
    }
  }
}

TEST(Tract, ValidationRejectsForeignElements) {
  const Tract kz = Tract::extension(Tract::krasner(), GammaKind::integer());
  EXPECT_THROW(validate(kz, krasner_one()), TractMismatch);
  EXPECT_THROW(validate(Tract::krasner(), ext_elem(krasner_one(), GammaValue::from_int(0))), TractMismatch);
  EXPECT_THROW(validate(kz, ext_elem(krasner_one(), GammaValue(Rational(1, 2)))), TractMismatch);
  EXPECT_THROW(validate(Tract::sign(), krasner_one()), TractMismatch);
  EXPECT_THROW(Tract::extension(kz, GammaKind::integer()), PreconditionError);
}

TEST(Tract, HomomorphismsPreserveNullSums) {
  const Tract sz = Tract::extension(Tract::sign(), GammaKind::integer());
  std::vector<TractMap> maps = {make_map(Hom::TrivialToK, sz), make_map(Hom::Modulus, sz),
                                make_map(Hom::EmbedIntoExtension, Tract::sign())};
  for (const auto& m : maps) {
    auto units = sample_units(m.source);
    for (const auto& a : units) {
      for (const auto& b : units) {
        for (const auto& c : units) {
          std::vector<Element> sum = {a, b, c};
          if (!is_null(m.source, sum)) continue;
          std::vector<Element> image = {hom_apply(m, a), hom_apply(m, b), hom_apply(m, c)};
          EXPECT_TRUE(is_null(m.target, image)) << m.name;
        }
        EXPECT_EQ(hom_apply(m, mul(m.source, a, b)), mul(m.target, hom_apply(m, a), hom_apply(m, b)));
      }
    }
  }
  // θ is not a homomorphism; it only serves as a projection.
  TractMap th = make_map(Hom::ThetaProjection, sz);
  EXPECT_FALSE(th.homomorphism);
  std::vector<Element> sum = {sg(1, 0), sg(1, 0), sg(-1, 1)};
  std::vector<Element> image = {th(sum[0]), th(sum[1]), th(sum[2])};
  EXPECT_FALSE(is_null(sz, sum));
  EXPECT_TRUE(is_null(Tract::sign(), image));
}

TEST(Tract, NamesAndPrinting) {
  EXPECT_EQ(Tract::extension(Tract::sign(), GammaKind::rational()).name(), "S[Q]");
  EXPECT_EQ(to_string(Tract::sign(), sign_elem(-1)), "-");
  EXPECT_TRUE(Tract::sign().is_perfect());
  EXPECT_FALSE(Tract::extension(Tract::triangle(), GammaKind::integer()).is_perfect());
  EXPECT_TRUE(Tract::extension(Tract::regular(), GammaKind::integer()).has_finite_base());
  EXPECT_FALSE(Tract::hahn().has_finite_base());
}
