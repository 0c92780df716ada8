#include "tracta/matroid.hpp"

#include <algorithm>

#include "tracta/errors.hpp"

namespace tracta {

PluckerVector::PluckerVector(Tract tract, int n, int r) : tract_(std::move(tract)), n_(n), r_(r) {
  if (n < 0 || n > kMaxGround) throw PreconditionError("ground set size must be in 0..16");
  if (r < 0 || r > n) throw PreconditionError("rank must be in 0..n");
  entries_.resize(binomial(n, r));
}

std::size_t PluckerVector::index(Subset s) const {
  if (s.size() != r_ || !s.subset_of(Subset::full(n_))) {
    throw PreconditionError("subset " + to_string(s) + " is not an r-subset of the ground set");
  }
  return colex_rank(s);
}

const Element& PluckerVector::operator[](Subset s) const { return entries_[index(s)]; }

void PluckerVector::set(Subset s, Element value) {
  validate(tract_, value);
  entries_[index(s)] = std::move(value);
}

bool PluckerVector::is_zero_function() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Element& e) { return e.is_zero(); });
}

std::vector<Subset> PluckerVector::support() const {
  std::vector<Subset> out;
  for (Subset s : subsets_of_size(n_, r_)) {
    if (!(*this)[s].is_zero()) out.push_back(s);
  }
  return out;
}

PluckerVector normalized(const PluckerVector& p) {
  auto supp = p.support();
  if (supp.empty()) return p;
  Element c = normalizer(p.tract(), p[supp.front()]);
  PluckerVector out(p.tract(), p.n(), p.rank());
  for (Subset s : supp) out.set(s, mul(p.tract(), c, p[s]));
  return out;
}

bool plucker_equivalent(const PluckerVector& p, const PluckerVector& q) {
  if (!(p.tract() == q.tract()) || p.n() != q.n() || p.rank() != q.rank()) return false;
  auto subsets = subsets_of_size(p.n(), p.rank());
  std::vector<Element> x, y;
  for (Subset s : subsets) {
    x.push_back(p[s]);
    y.push_back(q[s]);
  }
  return proportional(p.tract(), x, y);
}

int incidence_sign(int j, Subset I, Subset J) {
  std::uint32_t above = ~((2u << j) - 1u);
  int l = std::popcount(J.bits & above) + std::popcount(I.bits & above);
  return (l % 2 == 0) ? 1 : -1;
}

FormalSum relation_terms(const PluckerVector& p, const PluckerVector& q, Subset I, Subset J) {
  if (!(p.tract() == q.tract())) throw TractMismatch("relation between different tracts");
  if (I.size() != p.rank() - 1 || J.size() != q.rank() + 1) {
    throw PreconditionError("relation index sizes do not match the ranks");
  }
  const Tract& t = p.tract();
  FormalSum terms;
  for (int j : (J - I).elements()) {
    Element term = mul(t, p[I.with(j)], q[J.without(j)]);
    if (term.is_zero()) continue;
    if (incidence_sign(j, I, J) < 0) term = neg(t, term);
    terms.push_back(std::move(term));
  }
  return terms;
}

bool relation_holds(const PluckerVector& p, const PluckerVector& q, Subset I, Subset J) {
  return is_null(p.tract(), relation_terms(p, q, I, J));
}

PluckerReport check_plucker(const PluckerVector& p, Strength strength, bool all_failures) {
  PluckerReport rep;
  rep.nonzero = !p.is_zero_function();
  if (!rep.nonzero) return rep;
  rep.ok = true;
  int r = p.rank();
  if (r == 0 || r == p.n()) return rep;
  auto Is = subsets_of_size(p.n(), r - 1);
  auto Js = subsets_of_size(p.n(), r + 1);
  for (Subset I : Is) {
    for (Subset J : Js) {
      if (strength == Strength::Weak && (J - I).size() != 3) continue;
      if (!relation_holds(p, p, I, J)) {
        rep.ok = false;
        rep.failures.push_back({I, J});
        if (!all_failures) return rep;
      }
    }
  }
  return rep;
}

bool is_weak_matroid(const PluckerVector& p) { return check_plucker(p, Strength::Weak).ok; }
bool is_strong_matroid(const PluckerVector& p) { return check_plucker(p, Strength::Strong).ok; }

std::vector<Subset> underlying_bases(const PluckerVector& p) { return p.support(); }

int underlying_rank(const PluckerVector& p, Subset a) {
  int best = -1;
  for (Subset b : p.support()) best = std::max(best, (b & a).size());
  if (best < 0) throw PreconditionError("rank of a zero Plücker vector");
  return best;
}

Subset support(std::span<const Element> x) {
  Subset s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) s = s.with(static_cast<int>(i));
  }
  return s;
}

TractVector canonical(const Tract& t, TractVector x) {
  for (const auto& e : x) {
    if (e.is_zero()) continue;
    Element c = normalizer(t, e);
    for (auto& y : x) y = mul(t, c, y);
    break;
  }
  return x;
}

namespace {

bool vector_less(Subset sa, const TractVector& a, Subset sb, const TractVector& b) {
  if (sa != sb) return lex_less(sa, sb);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (int c = compare(a[i], b[i])) return c < 0;
  }
  return false;
}

}  // namespace

CircuitSet make_vector_set(const Tract& t, int n, std::vector<TractVector> vectors) {
  std::vector<std::pair<Subset, TractVector>> items;
  for (auto& v : vectors) {
    if (static_cast<int>(v.size()) != n) throw PreconditionError("vector length differs from n");
    Subset s = support(v);
    if (s.empty()) continue;
    items.emplace_back(s, canonical(t, std::move(v)));
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return vector_less(a.first, a.second, b.first, b.second);
  });
  CircuitSet out{t, n, {}};
  std::vector<Subset> supports;
  for (auto& [s, v] : items) {
    bool dup = false;
    for (std::size_t k = out.vectors.size(); k-- > 0 && supports[k] == s;) {
      if (proportional(t, out.vectors[k], v)) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      supports.push_back(s);
      out.vectors.push_back(std::move(v));
    }
  }
  return out;
}

bool same_vectors(const CircuitSet& a, const CircuitSet& b) {
  if (!(a.tract == b.tract) || a.n != b.n) return false;
  auto covered = [](const CircuitSet& x, const CircuitSet& y) {
    for (const auto& v : x.vectors) {
      bool found = false;
      for (const auto& w : y.vectors) {
        if (proportional(x.tract, v, w)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

CircuitSet circuits(const PluckerVector& p) {
  const Tract& t = p.tract();
  std::vector<TractVector> raw;
  for (Subset tau : subsets_of_size(p.n(), p.rank() + 1)) {
    TractVector c(static_cast<std::size_t>(p.n()));
    int s = 0;
    bool nonzero = false;
    for (int i : tau.elements()) {
      Element v = p[tau.without(i)];
      if (!v.is_zero()) nonzero = true;
      c[static_cast<std::size_t>(i)] = (s % 2 == 1) ? neg(t, v) : v;
      ++s;
    }
    if (nonzero) raw.push_back(std::move(c));
  }
  CircuitSet out = make_vector_set(t, p.n(), std::move(raw));
  for (std::size_t a = 0; a < out.vectors.size(); ++a) {
    for (std::size_t b = 0; b < out.vectors.size(); ++b) {
      if (a == b) continue;
      if (support(out.vectors[a]).subset_of(support(out.vectors[b]))) {
        throw IntegrityError("circuit supports " + to_string(support(out.vectors[a])) + " and " +
                             to_string(support(out.vectors[b])) + " are comparable");
      }
    }
  }
  return out;
}

PluckerVector dual(const PluckerVector& p) {
  const Tract& t = p.tract();
  PluckerVector out(t, p.n(), p.n() - p.rank());
  for (Subset s : subsets_of_size(p.n(), p.n() - p.rank())) {
    Subset c = complement(s, p.n());
    Element v = conj(t, p[c]);
    if (crossing_inversions(s, c) % 2 == 1) v = neg(t, v);
    out.set(s, std::move(v));
  }
  return out;
}

CircuitSet cocircuits(const PluckerVector& p) { return circuits(dual(p)); }

FormalSum inner_terms(const Tract& t, std::span<const Element> x, std::span<const Element> y) {
  if (x.size() != y.size()) throw PreconditionError("inner product of vectors of different length");
  FormalSum terms;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() || y[i].is_zero()) continue;
    terms.push_back(mul(t, x[i], conj(t, y[i])));
  }
  return terms;
}

bool is_orthogonal(const Tract& t, std::span<const Element> x, std::span<const Element> y) {
  return is_null(t, inner_terms(t, x, y));
}

bool is_covector(const CircuitSet& c, std::span<const Element> x) {
  if (static_cast<int>(x.size()) != c.n) throw PreconditionError("covector length differs from n");
  for (const auto& v : c.vectors) {
    if (!is_orthogonal(c.tract, x, v)) return false;
  }
  return true;
}

bool is_covector(const PluckerVector& p, std::span<const Element> x) {
  return is_covector(circuits(p), x);
}

std::vector<TractVector> min_supp(std::vector<TractVector> vectors) {
  std::vector<Subset> supps;
  for (const auto& v : vectors) supps.push_back(support(v));
  std::vector<TractVector> out;
  for (std::size_t a = 0; a < vectors.size(); ++a) {
    if (supps[a].empty()) continue;
    bool minimal = true;
    for (std::size_t b = 0; b < vectors.size() && minimal; ++b) {
      if (supps[b].empty() || supps[b] == supps[a]) continue;
      if (supps[b].subset_of(supps[a])) minimal = false;
    }
    if (minimal) out.push_back(std::move(vectors[a]));
  }
  return out;
}

TractVector restrict_vector(std::span<const Element> x, Subset a) {
  TractVector out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!a.contains(static_cast<int>(i))) out.push_back(x[i]);
  }
  return out;
}

TractVector embed_vector(std::span<const Element> x, Subset a) {
  std::size_t n = x.size() + static_cast<std::size_t>(a.size());
  TractVector out(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.contains(static_cast<int>(i))) out[i] = x[k++];
  }
  return out;
}

namespace {

/// Maps a subset of the reduced ground set E∖A back into E.
Subset lift(Subset s, Subset a, int n) {
  Subset out;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (a.contains(i)) continue;
    if (s.contains(k)) out = out.with(i);
    ++k;
  }
  return out;
}

void check_within(Subset a, int n) {
  if (!a.subset_of(Subset::full(n))) throw PreconditionError("subset lies outside the ground set");
}

}  // namespace

CircuitSet deletion(const CircuitSet& c, Subset a) {
  check_within(a, c.n);
  std::vector<TractVector> kept;
  for (const auto& v : c.vectors) {
    if ((support(v) & a).empty()) kept.push_back(restrict_vector(v, a));
  }
  return make_vector_set(c.tract, c.n - a.size(), std::move(kept));
}

CircuitSet contraction(const CircuitSet& c, Subset a) {
  check_within(a, c.n);
  std::vector<TractVector> restricted;
  for (const auto& v : c.vectors) restricted.push_back(restrict_vector(v, a));
  return make_vector_set(c.tract, c.n - a.size(), min_supp(std::move(restricted)));
}

PluckerVector contraction(const PluckerVector& p, Subset a) {
  check_within(a, p.n());
  if (p.is_zero_function()) throw PreconditionError("contraction of a zero Plücker vector");
  Subset s;
  for (Subset b : p.support()) {
    if ((b & a).size() > s.size()) s = b & a;
  }
  int n2 = p.n() - a.size();
  int r2 = p.rank() - s.size();
  PluckerVector out(p.tract(), n2, r2);
  for (Subset i2 : subsets_of_size(n2, r2)) {
    Subset i = lift(i2, a, p.n());
    Element v = p[i | s];
    if (crossing_inversions(i, s) % 2 == 1) v = neg(p.tract(), v);
    out.set(i2, std::move(v));
  }
  return out;
}

PluckerVector deletion(const PluckerVector& p, Subset a) {
  return dual(contraction(dual(p), a));
}

PluckerVector add_loops(const PluckerVector& p, Subset a) {
  int n2 = p.n() + a.size();
  check_within(a, n2);
  PluckerVector out(p.tract(), n2, p.rank());
  for (Subset i : subsets_of_size(p.n(), p.rank())) out.set(lift(i, a, n2), p[i]);
  return out;
}

PluckerVector add_coloops(const PluckerVector& p, Subset a) {
  int n2 = p.n() + a.size();
  check_within(a, n2);
  PluckerVector out(p.tract(), n2, p.rank() + a.size());
  for (Subset i : subsets_of_size(p.n(), p.rank())) {
    Subset lifted = lift(i, a, n2);
    Element v = p[i];
    if (crossing_inversions(lifted, a) % 2 == 1) v = neg(p.tract(), v);
    out.set(lifted | a, std::move(v));
  }
  return out;
}

CircuitSet add_loops(const CircuitSet& c, Subset a) {
  int n2 = c.n + a.size();
  check_within(a, n2);
  std::vector<TractVector> vs;
  for (const auto& v : c.vectors) vs.push_back(embed_vector(v, a));
  for (int i : a.elements()) {
    TractVector e(static_cast<std::size_t>(n2));
    e[static_cast<std::size_t>(i)] = one(c.tract);
    vs.push_back(std::move(e));
  }
  return make_vector_set(c.tract, n2, std::move(vs));
}

CircuitSet add_coloops(const CircuitSet& c, Subset a) {
  int n2 = c.n + a.size();
  check_within(a, n2);
  std::vector<TractVector> vs;
  for (const auto& v : c.vectors) vs.push_back(embed_vector(v, a));
  return make_vector_set(c.tract, n2, std::move(vs));
}

PluckerVector pushforward(const PluckerVector& p, const TractMap& f) {
  if (!(f.source == p.tract())) throw TractMismatch("map source differs from the matroid tract");
  PluckerVector out(f.target, p.n(), p.rank());
  for (Subset s : p.support()) out.set(s, f(p[s]));
  return out;
}

CircuitSet pushforward(const CircuitSet& c, const TractMap& f) {
  if (!(f.source == c.tract)) throw TractMismatch("map source differs from the circuit tract");
  std::vector<TractVector> vs;
  for (const auto& v : c.vectors) {
    TractVector w;
    for (const auto& e : v) w.push_back(f(e));
    vs.push_back(std::move(w));
  }
  return make_vector_set(f.target, c.n, std::move(vs));
}

TractVector fundamental_cocircuit(const PluckerVector& p, Subset basis, int j) {
  if (!basis.contains(j)) throw PreconditionError("j must lie in the basis");
  if (p[basis].is_zero()) throw PreconditionError(to_string(basis) + " is not a basis");
  const Tract& t = p.tract();
  PluckerVector d = dual(p);
  Subset tau = complement(basis, p.n()).with(j);
  TractVector c(static_cast<std::size_t>(p.n()));
  int s = 0;
  for (int i : tau.elements()) {
    Element v = d[tau.without(i)];
    c[static_cast<std::size_t>(i)] = (s % 2 == 1) ? neg(t, v) : v;
    ++s;
  }
  Element scale = inv(t, c[static_cast<std::size_t>(j)]);
  for (auto& e : c) e = mul(t, scale, e);
  return c;
}

std::optional<std::vector<Element>> span_contains(const Tract& t,
                                                  std::span<const TractVector> generators,
                                                  std::span<const Element> x,
                                                  std::span<const Element> domain) {
  const std::size_t k = generators.size();
  std::uint64_t total = 1;
  for (std::size_t g = 0; g < k; ++g) {
    if (generators[g].size() != x.size()) throw PreconditionError("generator length differs");
    total *= domain.size();
    if (total > enumeration_guard()) break;
  }
  check_guard(total, "span search");
  std::vector<std::size_t> pick(k, 0);
  std::vector<Element> alpha(k);
  FormalSum terms;
  if (domain.empty() && k > 0) return std::nullopt;
  while (true) {
    for (std::size_t g = 0; g < k; ++g) alpha[g] = domain[pick[g]];
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) {
      terms.clear();
      for (std::size_t g = 0; g < k; ++g) {
        Element e = mul(t, alpha[g], generators[g][i]);
        if (!e.is_zero()) terms.push_back(std::move(e));
      }
      if (!x[i].is_zero()) terms.push_back(neg(t, x[i]));
      ok = is_null(t, terms);
    }
    if (ok) return alpha;
    std::size_t g = 0;
    while (g < k && ++pick[g] == domain.size()) pick[g++] = 0;
    if (g == k) return std::nullopt;
  }
}

}  // namespace tracta
