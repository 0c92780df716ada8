#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "tracta/errors.hpp"
#include "tracta/matroid.hpp"

using namespace tracta;

namespace {

const Tract kQ = Tract::rationals();

PluckerVector sign_image(const PluckerVector& p) {
  PluckerVector s(Tract::sign(), p.n(), p.rank());
  for (Subset b : p.support()) s.set(b, sign_elem(std::get<Rational>(p[b].base()) > 0 ? 1 : -1));
  return s;
}

oracle::QMatrix insert_zero_columns(const oracle::QMatrix& a, Subset at, int n) {
  oracle::QMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t k = 0;
    for (int j = 0; j < n; ++j) out[i].push_back(at.contains(j) ? Rational(0) : a[i][k++]);
  }
  return out;
}

/// Block matrix with an identity on the new columns `at`.
oracle::QMatrix add_coloop_rows(const oracle::QMatrix& a, Subset at, int n) {
  oracle::QMatrix out = insert_zero_columns(a, at, n);
  for (int j : at.elements()) {
    std::vector<Rational> row(static_cast<std::size_t>(n));
    row[static_cast<std::size_t>(j)] = 1;
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST(Matroid, FieldPluckerVectorsAreStrong) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 40; ++k) {
    const int r = 1 + k % 3, n = r + 1 + k % 3;
    auto a = oracle::random_matrix(rng, r, n);
    PluckerVector p = oracle::plucker(a);
    EXPECT_TRUE(is_strong_matroid(p));
    EXPECT_TRUE(is_strong_matroid(sign_image(p)));
    EXPECT_TRUE(plucker_equivalent(normalized(p), p));
  }
}

TEST(Matroid, PerturbedVectorFailsOverQ) {
  oracle::QMatrix a = {{1, 0, 1, 2}, {0, 1, 3, 5}};
  PluckerVector p = oracle::plucker(a);
  p.set(Subset::of({2, 3}), rational_elem(p[Subset::of({2, 3})].is_zero() ? Rational(1) : Rational(7)));
  PluckerReport rep = check_plucker(p, Strength::Strong, true);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.failures.empty());
}

TEST(Matroid, KnownNonChirotope) {
  PluckerVector p(Tract::sign(), 4, 2);
  auto subs = subsets_of_size(4, 2);
  const int signs[6] = {1, 1, 1, 1, -1, 1};
  for (std::size_t i = 0; i < 6; ++i) p.set(subs[i], sign_elem(signs[i]));
  EXPECT_FALSE(is_weak_matroid(p));
  PluckerReport rep = check_plucker(p, Strength::Weak, true);
  ASSERT_EQ(rep.failures.size(), 4u);
}

TEST(Matroid, NonMatroidSupportFailsOverKrasner) {
  PluckerVector p(Tract::krasner(), 4, 2);
  p.set(Subset::of({0, 1}), krasner_one());
  p.set(Subset::of({2, 3}), krasner_one());
  EXPECT_FALSE(is_weak_matroid(p));
  PluckerVector zero(Tract::krasner(), 4, 2);
  EXPECT_FALSE(check_plucker(zero, Strength::Strong).nonzero);
}

TEST(Matroid, CircuitsMatchKernelAndRankOracle) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 40; ++k) {
    const int r = 1 + k % 3, n = r + 1 + k % 3;
    auto a = oracle::random_matrix(rng, r, n, -1, 1);
    PluckerVector p = oracle::plucker(a);
    CircuitSet c = circuits(p);
    std::vector<Subset> got;
    for (const auto& v : c.vectors) {
      got.push_back(support(v));
      auto x = oracle::values(v);
      for (const auto& row : a) {
        Rational dot = 0;
        for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * x[i];
        EXPECT_EQ(dot, 0);
      }
    }
    auto expected = oracle::circuit_supports(a);
    auto key = [](Subset s) { return s.bits; };
    std::ranges::sort(got, {}, key);
    std::ranges::sort(expected, {}, key);
    EXPECT_EQ(got, expected);
  }
}

TEST(Matroid, CocircuitsAreOrthogonalToCircuits) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    auto a = oracle::random_matrix(rng, 2, 5, -2, 2);
    PluckerVector p = oracle::plucker(a);
    CircuitSet c = circuits(p);
    for (const auto& d : cocircuits(p).vectors) {
      EXPECT_TRUE(is_covector(c, d));
      for (const auto& v : c.vectors) EXPECT_TRUE(is_orthogonal(kQ, v, d));
    }
  }
}

TEST(Matroid, DualIsTheOrthogonalComplement) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 30; ++k) {
    const int r = 1 + k % 3, n = r + 1 + k % 3;
    auto a = oracle::random_matrix(rng, r, n);
    PluckerVector p = oracle::plucker(a);
    PluckerVector d = dual(p);
    EXPECT_EQ(d.rank(), n - r);
    EXPECT_TRUE(plucker_equivalent(d, oracle::plucker(oracle::kernel(a))));
    EXPECT_TRUE(plucker_equivalent(dual(d), p));
  }
}

TEST(Matroid, ContractionMatchesPivoting) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 30; ++k) {
    auto a = oracle::random_matrix(rng, 3, 5, -2, 2);
    PluckerVector p = oracle::plucker(a);
    const int e = k % 5;
    if (oracle::column_rank(a, Subset::of({e})) == 0) continue;
    PluckerVector c = contraction(p, Subset::of({e}));
    EXPECT_EQ(c.n(), 4);
    EXPECT_TRUE(plucker_equivalent(c, oracle::plucker(oracle::contract(a, e))));
    // Circuit route agrees with the Plücker route.
    EXPECT_TRUE(same_vectors(circuits(c), contraction(circuits(p), Subset::of({e}))));
  }
}

TEST(Matroid, DeletionMatchesSubmatrix) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 30; ++k) {
    auto a = oracle::random_matrix(rng, 2, 5, -2, 2);
    PluckerVector p = oracle::plucker(a);
    Subset drop = Subset::of({k % 5});
    Subset keep = complement(drop, 5);
    if (oracle::column_rank(a, keep) < 2) continue;
    PluckerVector d = deletion(p, drop);
    EXPECT_TRUE(plucker_equivalent(d, oracle::plucker(oracle::columns(a, keep))));
    EXPECT_TRUE(same_vectors(circuits(d), deletion(circuits(p), drop)));
  }
}

TEST(Matroid, LoopsAndColoopsMatchMatrices) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    auto a = oracle::random_matrix(rng, 2, 4);
    PluckerVector p = oracle::plucker(a);
    const Subset at = k % 2 ? Subset::of({0, 3}) : Subset::of({2});
    const int n = 4 + at.size();
    PluckerVector loops = add_loops(p, at);
    EXPECT_TRUE(plucker_equivalent(loops, oracle::plucker(insert_zero_columns(a, at, n))));
    PluckerVector coloops = add_coloops(p, at);
    EXPECT_EQ(coloops.rank(), 2 + at.size());
    EXPECT_TRUE(plucker_equivalent(coloops, oracle::plucker(add_coloop_rows(a, at, n))));
    EXPECT_TRUE(same_vectors(circuits(loops), add_loops(circuits(p), at)));
    EXPECT_TRUE(same_vectors(circuits(coloops), add_coloops(circuits(p), at)));
  }
}

TEST(Matroid, FundamentalCocircuits) {
  oracle::QMatrix a = {{1, 0, 2, -1, 1}, {0, 1, 1, 3, -2}};
  PluckerVector p = oracle::plucker(a);
  CircuitSet cc = cocircuits(p);
  for (Subset b : p.support()) {
    for (int j : b.elements()) {
      TractVector d = fundamental_cocircuit(p, b, j);
      EXPECT_TRUE(support(d).subset_of(complement(b, 5).with(j)));
      EXPECT_EQ(d[static_cast<std::size_t>(j)], rational_elem(1));
      bool found = false;
      for (const auto& v : cc.vectors) found = found || proportional(kQ, v, d);
      EXPECT_TRUE(found);
    }
  }
}

TEST(Matroid, VectorSetsCanonicalizeAndDedupe) {
  TractVector x = {rational_elem(2), Element(), rational_elem(-4)};
  TractVector y = {rational_elem(-1), Element(), rational_elem(2)};
  CircuitSet s = make_vector_set(kQ, 3, {x, y, TractVector(3)});
  ASSERT_EQ(s.vectors.size(), 1u);
  EXPECT_EQ(s.vectors[0][0], rational_elem(1));
  auto m = min_supp({x, {rational_elem(1), rational_elem(1), rational_elem(1)}});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(support(m[0]), Subset::of({0, 2}));
  EXPECT_EQ(embed_vector(restrict_vector(x, Subset::of({1})), Subset::of({1})), x);
}

TEST(Matroid, SpanMembershipOverKrasner) {
  const Tract k = Tract::krasner();
  const Element o = krasner_one(), z;
  std::vector<TractVector> gens = {{o, o, z}, {z, o, o}};
  std::vector<Element> domain = {z, o};
  EXPECT_TRUE(span_contains(k, gens, TractVector{o, o, o}, domain).has_value());
  EXPECT_TRUE(span_contains(k, gens, TractVector{o, z, o}, domain).has_value());
  EXPECT_FALSE(span_contains(k, gens, TractVector{o, z, z}, domain).has_value());
}

TEST(Matroid, SetValidatesTract) {
  PluckerVector p(Tract::sign(), 3, 2);
  EXPECT_THROW(p.set(Subset::of({0, 1}), krasner_one()), TractMismatch);
  EXPECT_THROW(p.set(Subset::of({0}), sign_elem(1)), PreconditionError);
}
