#include "tracta/initial.hpp"

#include <algorithm>

#include "tracta/errors.hpp"

namespace tracta {

namespace {

void check_direction(const PluckerVector& p, std::span<const GammaExt> u) {
  if (!p.tract().is_extension()) throw PreconditionError("initial matroids need a tropical extension");
  if (static_cast<int>(u.size()) != p.n()) throw PreconditionError("direction length differs from n");
  for (const auto& x : u) {
    if (x.is_finite()) x.value().check_kind(p.tract().gamma_kind());
  }
}

GammaValue abs_components(const GammaValue& g) {
  std::vector<Rational> c = g.components();
  for (auto& q : c) q = abs(q);
  return GammaValue(std::move(c));
}

}  // namespace

Subset infinite_part(std::span<const GammaExt> u) {
  Subset z;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_infinite()) z = z.with(static_cast<int>(i));
  }
  return z;
}

bool is_toric(std::span<const GammaExt> u) { return infinite_part(u).empty(); }

PluckerVector toric_initial(const PluckerVector& p, std::span<const GammaExt> u) {
  check_direction(p, u);
  if (!is_toric(u)) throw PreconditionError("toric initial needs a finite direction");
  Tract base = p.tract().base();
  PluckerVector out(base, p.n(), p.rank());
  auto supp = p.support();
  if (supp.empty()) return out;
  std::vector<GammaExt> psi;
  psi.reserve(supp.size());
  for (Subset b : supp) {
    GammaValue v = p[b].gamma();
    for (int i : b.elements()) v = v - u[static_cast<std::size_t>(i)].value();
    psi.emplace_back(std::move(v));
  }
  for (std::size_t k : argmin_set(psi)) out.set(supp[k], theta(p[supp[k]]));
  return out;
}

InitialMatroid initial(const PluckerVector& p, std::span<const GammaExt> u) {
  check_direction(p, u);
  Subset z = infinite_part(u);
  if (z.empty()) {
    PluckerVector t = toric_initial(p, u);
    CircuitSet c = circuits(t);
    return {std::move(t), std::move(c)};
  }
  PluckerVector pc = contraction(p, z);
  CircuitSet via_circuits = contraction(circuits(p), z);
  if (!same_vectors(circuits(pc), via_circuits)) {
    throw IntegrityError("contraction by " + to_string(z) + " disagrees between Plücker and circuit routes");
  }
  DirectionU rest;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_finite()) rest.push_back(u[i]);
  }
  PluckerVector t = add_coloops(toric_initial(pc, rest), z);
  int expected = p.rank() - underlying_rank(p, z) + z.size();
  if (t.rank() != expected) throw IntegrityError("initial matroid has unexpected rank");
  CircuitSet c = circuits(t);
  return {std::move(t), std::move(c)};
}

TractVector initial_circuit(std::span<const Element> c, std::span<const GammaExt> u) {
  if (c.size() != u.size()) throw PreconditionError("direction length differs from vector length");
  std::vector<GammaExt> w;
  w.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) w.push_back(modulus(c[i]) + u[i]);
  TractVector out(c.size());
  for (std::size_t k : argmin_set(w)) out[k] = theta(c[k]);
  return out;
}

CircuitSet initial_circuits_of(const PluckerVector& p, std::span<const GammaExt> u) {
  check_direction(p, u);
  std::vector<TractVector> vs;
  for (const auto& c : circuits(p).vectors) vs.push_back(initial_circuit(c, u));
  CircuitSet out = make_vector_set(p.tract().base(), p.n(), min_supp(std::move(vs)));
  InitialMatroid m = initial(p, u);
  if (!same_vectors(out, m.circuits)) {
    throw IntegrityError("initial circuits differ from the circuits of the initial matroid at u=" +
                         to_string(u));
  }
  return out;
}

bool initial_dual_check(const PluckerVector& p, std::span<const GammaExt> u) {
  check_direction(p, u);
  DirectionU minus;
  for (const auto& x : u) minus.push_back(x.negated());
  return plucker_equivalent(dual(toric_initial(p, u)), toric_initial(dual(p), minus));
}

DirectionU witness_u(const PluckerVector& p, Subset I, Subset J) {
  if (!p.tract().is_extension()) throw PreconditionError("witness directions need a tropical extension");
  if ((J - I).size() != 3 || (I - J).size() != 1) {
    throw PreconditionError("(I,J) is not a three-term relation");
  }
  if (relation_holds(p, p, I, J)) throw PreconditionError("relation holds; no witness exists");
  const GammaKind& kind = p.tract().gamma_kind();
  auto gamma = [&](Subset b) {
    const Element& e = p[b];
    return e.is_zero() ? GammaValue::zero(kind) : e.gamma();
  };

  auto js = (J - I).elements();
  int j0 = -1;
  GammaExt best = GammaExt::infinity();
  for (int j : js) {
    GammaExt v = modulus(p[I.with(j)]) + modulus(p[J.without(j)]);
    if (v.is_finite() && (j0 < 0 || v < best)) {
      best = v;
      j0 = j;
    }
  }
  if (j0 < 0) throw IntegrityError("failing relation has no finite term");
  std::vector<int> others;
  for (int j : js) {
    if (j != j0) others.push_back(j);
  }
  int i = (I - J).elements().front();

  std::vector<Rational> total(static_cast<std::size_t>(kind.width));
  for (Subset b : subsets_of_size(p.n(), p.rank())) {
    GammaValue a = abs_components(gamma(b));
    for (int c = 0; c < kind.width; ++c) total[static_cast<std::size_t>(c)] += a[c];
  }
  // Each compared quantity is a combination of at most 14 of the γ_B.
  for (auto& q : total) q = 1 + 16 * q;
  GammaValue omega(total);

  DirectionU u(static_cast<std::size_t>(p.n()));
  for (int s = 0; s < p.n(); ++s) {
    auto& us = u[static_cast<std::size_t>(s)];
    if (s == i) {
      us = gamma(I.with(others[0])) + gamma(I.with(others[1])) - gamma(J.without(j0));
    } else if (J.contains(s) && !I.contains(s)) {
      us = gamma(I.with(s));
    } else if (I.contains(s) && J.contains(s)) {
      us = omega;
    } else {
      us = -omega;
    }
  }
  PluckerVector t = toric_initial(p, u);
  if (relation_holds(t, t, I, J)) {
    throw IntegrityError("witness direction " + to_string(u) + " does not break relation (" +
                         to_string(I) + "," + to_string(J) + ")");
  }
  return u;
}

std::vector<DirectionU> direction_grid(int n, std::span<const GammaExt> values) {
  std::uint64_t total = 1;
  for (int i = 0; i < n && total <= enumeration_guard(); ++i) total *= values.size();
  check_guard(total, "direction grid");
  std::vector<DirectionU> out;
  if (values.empty()) return out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    DirectionU u;
    for (auto k : pick) u.push_back(values[k]);
    out.push_back(std::move(u));
    std::size_t g = 0;
    while (g < pick.size() && ++pick[g] == values.size()) pick[g++] = 0;
    if (g == pick.size()) break;
  }
  return out;
}

ThmAReport verify_thmA(const PluckerVector& p, std::span<const DirectionU> extra_u) {
  ThmAReport rep;
  PluckerReport weak = check_plucker(p, Strength::Weak, true);
  rep.weak = weak.ok;
  rep.strong = check_plucker(p, Strength::Strong).ok;
  bool perfect = p.tract().is_perfect();
  if (perfect && rep.weak != rep.strong) rep.perfect_agrees = false;

  auto sample = [&](const DirectionU& u) {
    PluckerVector t = toric_initial(p, u);
    InitialSample s{u, is_weak_matroid(t), is_strong_matroid(t)};
    if (rep.weak && !s.weak) rep.weak_propagates = false;
    if (perfect && s.weak != s.strong) rep.perfect_agrees = false;
    rep.samples.push_back(std::move(s));
  };
  for (const auto& u : extra_u) sample(u);

  if (weak.nonzero) {
    for (const auto& f : weak.failures) {
      WitnessRecord w{f, {}, false};
      try {
        w.u = witness_u(p, f.I, f.J);
        PluckerVector t = toric_initial(p, w.u);
        w.initial_fails = !relation_holds(t, t, f.I, f.J);
        sample(w.u);
      } catch (const IntegrityError&) {
        w.initial_fails = false;
      }
      if (!w.initial_fails) rep.witnesses_fail = false;
      rep.witnesses.push_back(std::move(w));
    }
  }
  return rep;
}

std::string to_string(std::span<const GammaExt> u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) s += ",";
    s += u[i].to_string();
  }
  return s + ")";
}

}  // namespace tracta
