#include "tracta/valuation.hpp"

#include <random>

#include "tracta/errors.hpp"

namespace tracta {

ValuationKind parse_valuation_kind(const std::string& name) {
  if (name == "val") return ValuationKind::Val;
  if (name == "sval") return ValuationKind::Sval;
  if (name == "fval") return ValuationKind::Fval;
  throw SchemaError("unknown valuation kind '" + name + "'");
}

std::string to_string(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::Val:
      return "val";
    case ValuationKind::Sval:
      return "sval";
    case ValuationKind::Fval:
      return "fval";
  }
  return "?";
}

Tract valuation_target(ValuationKind kind, const GammaKind& gamma) {
  if (gamma.tag == GammaKind::Tag::Lex) throw PreconditionError("series exponents are rational, not lex tuples");
  switch (kind) {
    case ValuationKind::Val:
      return Tract::extension(Tract::krasner(), gamma);
    case ValuationKind::Sval:
      return Tract::extension(Tract::sign(), gamma);
    case ValuationKind::Fval:
      return Tract::extension(Tract::rationals(), gamma);
  }
  throw PreconditionError("unknown valuation kind");
}

Element valuate(ValuationKind kind, const HahnSeries& a, const GammaKind& gamma) {
  if (a.is_zero()) return {};
  GammaValue g(a.leading_exp());
  g.check_kind(gamma);
  const Rational& lc = a.leading_coeff();
  switch (kind) {
    case ValuationKind::Val:
      return Element(KrasnerOne{}, g);
    case ValuationKind::Sval:
      return Element(SignUnit{lc > 0 ? 1 : -1}, g);
    case ValuationKind::Fval:
      return Element(lc, g);
  }
  throw PreconditionError("unknown valuation kind");
}

Element valuate(ValuationKind kind, const Element& a, const GammaKind& gamma) {
  if (a.is_zero()) return {};
  validate(Tract::hahn(), a);
  return valuate(kind, std::get<HahnSeries>(a.base()), gamma);
}

TractMap valuation_map(ValuationKind kind, const GammaKind& gamma) {
  return {to_string(kind), Tract::hahn(), valuation_target(kind, gamma), true,
          [kind, gamma](const Element& a) { return valuate(kind, a, gamma); }};
}

namespace {

SeriesMatrix columns(const SeriesMatrix& a, Subset cols) {
  SeriesMatrix m;
  for (const auto& row : a) {
    std::vector<HahnSeries> r;
    for (int c : cols.elements()) r.push_back(row[static_cast<std::size_t>(c)]);
    m.push_back(std::move(r));
  }
  return m;
}

void check_shape(const SeriesMatrix& a) {
  if (a.empty()) throw PreconditionError("matrix has no rows");
  std::size_t n = a[0].size();
  for (const auto& row : a) {
    if (row.size() != n) throw PreconditionError("ragged matrix");
  }
  if (a.size() > n || n > static_cast<std::size_t>(kMaxGround)) {
    throw PreconditionError("matrix must satisfy d ≤ n ≤ 16");
  }
}

}  // namespace

PluckerVector plucker_from_matrix(const SeriesMatrix& a) {
  check_shape(a);
  int d = static_cast<int>(a.size());
  int n = static_cast<int>(a[0].size());
  PluckerVector p(Tract::hahn(), n, d);
  for (Subset j : subsets_of_size(n, d)) p.set(j, series_elem(determinant(columns(a, j))));
  if (p.is_zero_function()) throw PreconditionError("matrix rows are linearly dependent");
  return normalized(p);
}

PluckerVector tropicalize_matroid(const PluckerVector& p, ValuationKind kind, const GammaKind& gamma) {
  return pushforward(p, valuation_map(kind, gamma));
}

TractVector initial_form(std::span<const Element> c, std::span<const GammaExt> u) {
  if (c.size() != u.size()) throw PreconditionError("direction length differs from vector length");
  std::vector<GammaExt> w;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) {
      w.push_back(GammaExt::infinity());
      continue;
    }
    const auto& s = std::get<HahnSeries>(c[i].base());
    w.push_back(GammaExt(GammaValue(s.leading_exp())) + u[i]);
  }
  TractVector out(c.size());
  for (std::size_t k : argmin_set(w)) {
    out[k] = rational_elem(std::get<HahnSeries>(c[k].base()).leading_coeff());
  }
  TractVector fv;
  for (const auto& e : c) fv.push_back(valuate(ValuationKind::Fval, e));
  if (!(initial_circuit(fv, u) == out)) {
    throw IntegrityError("initial form disagrees with the initial circuit of fval");
  }
  return out;
}

namespace {

/// Adjugate of a square series matrix: adj(M)_{ij} = (-1)^{i+j} det(M without row j, col i).
SeriesMatrix adjugate(const SeriesMatrix& m) {
  std::size_t d = m.size();
  SeriesMatrix adj(d, std::vector<HahnSeries>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      SeriesMatrix minor;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == j) continue;
        std::vector<HahnSeries> row;
        for (std::size_t c = 0; c < d; ++c) {
          if (c != i) row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
      }
      HahnSeries v = determinant(minor);
      adj[i][j] = ((i + j) % 2 == 1) ? -v : v;
    }
  }
  return adj;
}

std::vector<Rational> coefficient_candidates(ValuationKind kind, const Element& target) {
  switch (kind) {
    case ValuationKind::Val:
      return {1, -1, 2, 3, -2};
    case ValuationKind::Sval: {
      int s = std::get<SignUnit>(target.base()).s;
      return {Rational(s), Rational(2 * s), Rational(3 * s), Rational(s, 2)};
    }
    case ValuationKind::Fval:
      return {std::get<Rational>(target.base())};
  }
  return {};
}

/// Row-space vector x with x_B = xb, returned valuated: ν(x_k) = ν(det·x_k)·ν(det)^{-1}.
TractVector valuate_solution(const SeriesMatrix& a, const SeriesMatrix& adj,
                             const HahnSeries& det, const std::vector<HahnSeries>& xb,
                             ValuationKind kind, const GammaKind& gamma, const Tract& target) {
  std::size_t d = a.size();
  std::vector<HahnSeries> lambda(d);  // det · x_B · A_B^{-1}
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) lambda[k] += xb[i] * adj[i][k];
  }
  Element inv_det = inv(target, valuate(kind, det, gamma));
  TractVector out;
  for (std::size_t c = 0; c < a[0].size(); ++c) {
    HahnSeries y;
    for (std::size_t k = 0; k < d; ++k) y += lambda[k] * a[k][c];
    out.push_back(mul(target, valuate(kind, y, gamma), inv_det));
  }
  return out;
}

bool find_preimage(const SeriesMatrix& a, const PluckerVector& p, const TractVector& x,
                   ValuationKind kind, const GammaKind& gamma, const Tract& target) {
  std::size_t d = a.size();
  for (Subset b : p.support()) {
    SeriesMatrix ab = columns(a, b);
    HahnSeries det = determinant(ab);
    SeriesMatrix adj = adjugate(ab);
    auto cols = b.elements();
    std::vector<std::vector<HahnSeries>> options(d);
    for (std::size_t i = 0; i < d; ++i) {
      const Element& xi = x[static_cast<std::size_t>(cols[i])];
      if (xi.is_zero()) {
        options[i].push_back(HahnSeries());
        continue;
      }
      const Rational& e = xi.gamma()[0];
      for (const Rational& c : coefficient_candidates(kind, xi)) {
        for (int pert : {0, 1, -1}) {
          options[i].push_back(HahnSeries::monomial(c, e) + HahnSeries::monomial(pert, e + 1));
        }
      }
    }
    std::vector<std::size_t> pick(d, 0);
    while (true) {
      std::vector<HahnSeries> xb;
      for (std::size_t i = 0; i < d; ++i) xb.push_back(options[i][pick[i]]);
      if (valuate_solution(a, adj, det, xb, kind, gamma, target) == x) return true;
      std::size_t i = 0;
      while (i < d && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == d) break;
    }
  }
  return false;
}

}  // namespace

TropicalisationReport sample_and_check_tropicalisation(const SeriesMatrix& a, ValuationKind kind,
                                                       int trials, const SampleGrid& grid,
                                                       std::uint64_t seed, const GammaKind& gamma) {
  if (trials < 1) throw PreconditionError("at least one trial is required");
  PluckerVector p = plucker_from_matrix(a);
  Tract target = valuation_target(kind, gamma);
  LinearSpace ls(tropicalize_matroid(p, kind, gamma));
  TropicalisationReport rep;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), ex(-1, 2), zero(0, 5);
  std::size_t n = a[0].size();
  for (int t = 0; t < trials; ++t) {
    std::vector<HahnSeries> x(n);
    for (const auto& row : a) {
      HahnSeries lambda;
      if (zero(rng) != 0) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        if (gamma.tag == GammaKind::Tag::Int) {
          lambda = HahnSeries::monomial(c, ex(rng));
        } else {
          lambda = HahnSeries::monomial(c, Rational(ex(rng), den(rng)));
        }
      }
      for (std::size_t c = 0; c < n; ++c) x[c] += lambda * row[c];
    }
    TractVector v;
    for (const auto& s : x) v.push_back(valuate(kind, s, gamma));
    ++rep.trials;
    if (ls.charB(v)) {
      ++rep.contained;
    } else {
      rep.escaped.push_back(std::move(v));
    }
  }

  for (const auto& x : grid_points(target, grid)) {
    if (!ls.charB(x)) continue;
    ++rep.grid_members;
    if (find_preimage(a, p, x, kind, gamma, target)) {
      ++rep.matched;
    } else {
      rep.unresolved.push_back(x);
    }
  }
  return rep;
}

}  // namespace tracta
