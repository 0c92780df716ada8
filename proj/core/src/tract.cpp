#include "tracta/tract.hpp"

#include <algorithm>

#include "tracta/errors.hpp"

namespace tracta {

namespace {

const char* kind_name(TractKind k) {
  switch (k) {
    case TractKind::Krasner:
      return "K";
    case TractKind::Sign:
      return "S";
    case TractKind::TriangleV:
      return "V";
    case TractKind::RegularPF:
      return "U0";
    case TractKind::DyadicPF:
      return "D";
    case TractKind::HahnField:
      return "Hahn";
    case TractKind::RationalField:
      return "Q";
    case TractKind::Extension:
      return "Ext";
  }
  return "?";
}

void check_base(TractKind k, const BaseUnit& u) {
  auto fail = [&](const std::string& why) {
    throw TractMismatch(std::string("not a unit of ") + kind_name(k) + ": " + why);
  };
  switch (k) {
    case TractKind::Krasner:
      if (!std::holds_alternative<KrasnerOne>(u)) fail("expected the Krasner unit");
      return;
    case TractKind::Sign:
    case TractKind::RegularPF: {
      const auto* s = std::get_if<SignUnit>(&u);
      if (s == nullptr || (s->s != 1 && s->s != -1)) fail("expected a sign");
      return;
    }
    case TractKind::TriangleV: {
      const auto* q = std::get_if<Rational>(&u);
      if (q == nullptr || *q <= 0) fail("expected a positive rational");
      return;
    }
    case TractKind::RationalField: {
      const auto* q = std::get_if<Rational>(&u);
      if (q == nullptr || *q == 0) fail("expected a nonzero rational");
      return;
    }
    case TractKind::DyadicPF: {
      const auto* d = std::get_if<DyadicUnit>(&u);
      if (d == nullptr || (d->sign != 1 && d->sign != -1)) fail("expected ±2^k");
      return;
    }
    case TractKind::HahnField: {
      const auto* h = std::get_if<HahnSeries>(&u);
      if (h == nullptr || h->is_zero()) fail("expected a nonzero series");
      return;
    }
    case TractKind::Extension:
      break;
  }
  throw TractMismatch("nested extensions are not supported");
}

BaseUnit mul_base(TractKind k, const BaseUnit& a, const BaseUnit& b) {
  switch (k) {
    case TractKind::Krasner:
      return KrasnerOne{};
    case TractKind::Sign:
    case TractKind::RegularPF:
      return SignUnit{std::get<SignUnit>(a).s * std::get<SignUnit>(b).s};
    case TractKind::TriangleV:
    case TractKind::RationalField:
      return Rational(std::get<Rational>(a) * std::get<Rational>(b));
    case TractKind::DyadicPF: {
      const auto& x = std::get<DyadicUnit>(a);
      const auto& y = std::get<DyadicUnit>(b);
      return DyadicUnit{x.sign * y.sign, x.exp + y.exp};
    }
    case TractKind::HahnField:
      return std::get<HahnSeries>(a) * std::get<HahnSeries>(b);
    case TractKind::Extension:
      break;
  }
  throw TractMismatch("nested extensions are not supported");
}

BaseUnit inv_base(TractKind k, const BaseUnit& a) {
  switch (k) {
    case TractKind::Krasner:
    case TractKind::Sign:
    case TractKind::RegularPF:
      return a;
    case TractKind::TriangleV:
    case TractKind::RationalField:
      return Rational(1 / std::get<Rational>(a));
    case TractKind::DyadicPF: {
      const auto& x = std::get<DyadicUnit>(a);
      return DyadicUnit{x.sign, -x.exp};
    }
    case TractKind::HahnField:
      return std::get<HahnSeries>(a).monomial_inverse();
    case TractKind::Extension:
      break;
  }
  throw TractMismatch("nested extensions are not supported");
}

BaseUnit neg_base(TractKind k, const BaseUnit& a) {
  switch (k) {
    case TractKind::Krasner:
    case TractKind::TriangleV:
      return a;
    case TractKind::Sign:
    case TractKind::RegularPF:
      return SignUnit{-std::get<SignUnit>(a).s};
    case TractKind::RationalField:
      return Rational(-std::get<Rational>(a));
    case TractKind::DyadicPF: {
      const auto& x = std::get<DyadicUnit>(a);
      return DyadicUnit{-x.sign, x.exp};
    }
    case TractKind::HahnField:
      return -std::get<HahnSeries>(a);
    case TractKind::Extension:
      break;
  }
  throw TractMismatch("nested extensions are not supported");
}

bool is_null_base(TractKind k, const std::vector<const BaseUnit*>& terms) {
  if (terms.empty()) return true;
  switch (k) {
    case TractKind::Krasner:
      return terms.size() >= 2;
    case TractKind::Sign: {
      bool pos = false, negv = false;
      for (const auto* u : terms) (std::get<SignUnit>(*u).s > 0 ? pos : negv) = true;
      return pos && negv;
    }
    case TractKind::TriangleV: {
      Rational sum = 0, mx = 0;
      for (const auto* u : terms) {
        const auto& q = std::get<Rational>(*u);
        sum += q;
        if (q > mx) mx = q;
      }
      return terms.size() >= 2 && 2 * mx <= sum;
    }
    case TractKind::RegularPF: {
      long s = 0;
      for (const auto* u : terms) s += std::get<SignUnit>(*u).s;
      return s == 0;
    }
    case TractKind::DyadicPF: {
      long lo = std::get<DyadicUnit>(*terms[0]).exp;
      for (const auto* u : terms) lo = std::min(lo, std::get<DyadicUnit>(*u).exp);
      mpz_class sum = 0;
      for (const auto* u : terms) {
        const auto& d = std::get<DyadicUnit>(*u);
        mpz_class p = 1;
        p <<= static_cast<unsigned long>(d.exp - lo);
        sum += d.sign * p;
      }
      return sum == 0;
    }
    case TractKind::HahnField: {
      HahnSeries sum;
      for (const auto* u : terms) sum += std::get<HahnSeries>(*u);
      return sum.is_zero();
    }
    case TractKind::RationalField: {
      Rational sum = 0;
      for (const auto* u : terms) sum += std::get<Rational>(*u);
      return sum == 0;
    }
    case TractKind::Extension:
      break;
  }
  throw TractMismatch("nested extensions are not supported");
}

int compare_base(const BaseUnit& a, const BaseUnit& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  if (const auto* s = std::get_if<SignUnit>(&a)) {
    int t = std::get<SignUnit>(b).s;
    return s->s == t ? 0 : (s->s > t ? -1 : 1);  // + before -
  }
  if (const auto* q = std::get_if<Rational>(&a)) {
    int c = cmp(*q, std::get<Rational>(b));
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (const auto* d = std::get_if<DyadicUnit>(&a)) {
    const auto& e = std::get<DyadicUnit>(b);
    if (d->sign != e.sign) return d->sign > e.sign ? -1 : 1;
    return d->exp == e.exp ? 0 : (d->exp < e.exp ? -1 : 1);
  }
  if (const auto* h = std::get_if<HahnSeries>(&a)) {
    const auto& x = h->terms();
    const auto& y = std::get<HahnSeries>(b).terms();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
      if (int c = cmp(x[i].exp, y[i].exp)) return c < 0 ? -1 : 1;
      if (int c = cmp(x[i].coeff, y[i].coeff)) return c < 0 ? -1 : 1;
    }
    return x.size() == y.size() ? 0 : (x.size() < y.size() ? -1 : 1);
  }
  return 0;
}

std::string base_to_string(const BaseUnit& u) {
  if (std::holds_alternative<KrasnerOne>(u)) return "1";
  if (const auto* s = std::get_if<SignUnit>(&u)) return s->s > 0 ? "+" : "-";
  if (const auto* q = std::get_if<Rational>(&u)) return to_string(*q);
  if (const auto* d = std::get_if<DyadicUnit>(&u)) {
    return std::string(d->sign > 0 ? "" : "-") + "2^" + std::to_string(d->exp);
  }
  return std::get<HahnSeries>(u).to_string();
}

}  // namespace

Tract Tract::of_kind(TractKind kind) {
  if (kind == TractKind::Extension) throw PreconditionError("extension needs a base and a group");
  return Tract(kind);
}

Tract Tract::extension(const Tract& base, const GammaKind& gamma) {
  if (base.is_extension()) throw PreconditionError("nested tropical extensions are not supported");
  Tract t(TractKind::Extension);
  t.base_kind_ = base.kind_;
  t.gamma_ = gamma;
  return t;
}

Tract Tract::base() const {
  if (!is_extension()) throw PreconditionError(name() + " is not a tropical extension");
  return Tract(base_kind_);
}

const GammaKind& Tract::gamma_kind() const {
  if (!is_extension()) throw PreconditionError(name() + " is not a tropical extension");
  return gamma_;
}

bool Tract::is_perfect() const { return base_kind() != TractKind::TriangleV; }

bool Tract::has_finite_base() const {
  TractKind k = base_kind();
  return k == TractKind::Krasner || k == TractKind::Sign || k == TractKind::RegularPF;
}

std::string Tract::name() const {
  if (!is_extension()) return kind_name(kind_);
  return std::string(kind_name(base_kind_)) + "[" + gamma_.name() + "]";
}

const BaseUnit& Element::base() const {
  if (!base_) throw PreconditionError("zero has no unit payload");
  return *base_;
}

const GammaValue& Element::gamma() const {
  if (!gamma_) throw PreconditionError("element has no group value");
  return *gamma_;
}

bool operator==(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  if (a.has_gamma() != b.has_gamma()) return false;
  if (a.has_gamma() && (a.gamma().width() != b.gamma().width() || !(a.gamma() == b.gamma()))) {
    return false;
  }
  return *a.base_ == *b.base_;
}

Element krasner_one() { return Element(KrasnerOne{}); }
Element sign_elem(int s) {
  if (s == 0) return {};
  return Element(SignUnit{s > 0 ? 1 : -1});
}
Element rational_elem(const Rational& q) {
  if (q == 0) return {};
  return Element(q);
}
Element dyadic_elem(int sign, long exp) { return Element(DyadicUnit{sign, exp}); }
Element series_elem(const HahnSeries& s) {
  if (s.is_zero()) return {};
  return Element(s);
}
Element ext_elem(const Element& base, const GammaValue& gamma) {
  if (base.is_zero()) return {};
  return Element(base.base(), gamma);
}

void validate(const Tract& t, const Element& a) {
  if (a.is_zero()) return;
  if (t.is_extension()) {
    if (!a.has_gamma()) throw TractMismatch("element of " + t.name() + " lacks a group value");
    a.gamma().check_kind(t.gamma_kind());
  } else if (a.has_gamma()) {
    throw TractMismatch("element of " + t.name() + " carries a group value");
  }
  check_base(t.base_kind(), a.base());
}

Element one(const Tract& t) {
  BaseUnit u;
  switch (t.base_kind()) {
    case TractKind::Krasner:
      u = KrasnerOne{};
      break;
    case TractKind::Sign:
    case TractKind::RegularPF:
      u = SignUnit{1};
      break;
    case TractKind::TriangleV:
    case TractKind::RationalField:
      u = Rational(1);
      break;
    case TractKind::DyadicPF:
      u = DyadicUnit{1, 0};
      break;
    case TractKind::HahnField:
      u = HahnSeries(1);
      break;
    case TractKind::Extension:
      throw TractMismatch("nested extensions are not supported");
  }
  if (t.is_extension()) return Element(u, GammaValue::zero(t.gamma_kind()));
  return Element(u);
}

Element minus_one(const Tract& t) { return neg(t, one(t)); }

Element mul(const Tract& t, const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return {};
  BaseUnit u = mul_base(t.base_kind(), a.base(), b.base());
  if (t.is_extension()) return Element(std::move(u), a.gamma() + b.gamma());
  return Element(std::move(u));
}

Element inv(const Tract& t, const Element& a) {
  if (a.is_zero()) throw PreconditionError("zero is not invertible");
  BaseUnit u = inv_base(t.base_kind(), a.base());
  if (t.is_extension()) return Element(std::move(u), -a.gamma());
  return Element(std::move(u));
}

Element neg(const Tract& t, const Element& a) {
  if (a.is_zero()) return a;
  BaseUnit u = neg_base(t.base_kind(), a.base());
  if (t.is_extension()) return Element(std::move(u), a.gamma());
  return Element(std::move(u));
}

Element conj(const Tract&, const Element& a) { return a; }

bool is_null(const Tract& t, std::span<const Element> terms) {
  std::vector<const BaseUnit*> base;
  base.reserve(terms.size());
  if (!t.is_extension()) {
    for (const auto& a : terms) {
      if (!a.is_zero()) base.push_back(&a.base());
    }
    return is_null_base(t.kind(), base);
  }
  const GammaValue* lo = nullptr;
  for (const auto& a : terms) {
    if (a.is_zero()) continue;
    if (lo == nullptr || a.gamma() < *lo) {
      lo = &a.gamma();
      base.assign(1, &a.base());
    } else if (a.gamma() == *lo) {
      base.push_back(&a.base());
    }
  }
  return is_null_base(t.base_kind(), base);
}

bool hypersum_contains(const Tract& t, const Element& a, const Element& b, const Element& c) {
  Element terms[3] = {b, c, neg(t, a)};
  return is_null(t, terms);
}

Element normalizer(const Tract& t, const Element& a) {
  if (a.is_zero()) throw PreconditionError("cannot normalize by zero");
  if (t.base_kind() == TractKind::HahnField) {
    const auto& s = std::get<HahnSeries>(a.base());
    Element lead(HahnSeries::monomial(s.leading_coeff(), s.leading_exp()));
    if (t.is_extension()) lead = Element(lead.base(), a.gamma());
    return inv(t, lead);
  }
  return inv(t, a);
}

bool proportional(const Tract& t, std::span<const Element> x, std::span<const Element> y) {
  if (x.size() != y.size()) return false;
  std::size_t pivot = x.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() != y[i].is_zero()) return false;
    if (pivot == x.size() && !x[i].is_zero()) pivot = i;
  }
  if (pivot == x.size()) return true;
  // X = cY  iff  X_i·Y_p = Y_i·X_p for all i.
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (!(mul(t, x[i], y[pivot]) == mul(t, y[i], x[pivot]))) return false;
  }
  return true;
}

std::vector<Element> finite_units(const Tract& t) {
  switch (t.kind()) {
    case TractKind::Krasner:
      return {krasner_one()};
    case TractKind::Sign:
    case TractKind::RegularPF:
      return {sign_elem(1), sign_elem(-1)};
    default:
      throw PreconditionError(t.name() + " has infinitely many units");
  }
}

std::vector<Element> sample_units(const Tract& t) {
  std::vector<Element> base;
  switch (t.base_kind()) {
    case TractKind::Krasner:
    case TractKind::Sign:
    case TractKind::RegularPF:
      base = finite_units(t.is_extension() ? t.base() : t);
      break;
    case TractKind::TriangleV:
      for (const char* q : {"1/2", "1", "2", "3"}) base.push_back(rational_elem(parse_rational(q)));
      break;
    case TractKind::RationalField:
      for (const char* q : {"1", "-1", "2", "-2", "1/2", "-1/3"}) {
        base.push_back(rational_elem(parse_rational(q)));
      }
      break;
    case TractKind::DyadicPF:
      for (int s : {1, -1}) {
        for (long k : {-1L, 0L, 1L}) base.push_back(dyadic_elem(s, k));
      }
      break;
    case TractKind::HahnField: {
      HahnSeries t1 = HahnSeries::t();
      for (const HahnSeries& h : {HahnSeries(1), HahnSeries(-1), t1, HahnSeries(1) - t1,
                                  HahnSeries(-2) + HahnSeries::monomial(1, Rational(1, 2)),
                                  HahnSeries::monomial(3, -1) + t1}) {
        base.push_back(series_elem(h));
      }
      break;
    }
    case TractKind::Extension:
      break;
  }
  if (!t.is_extension()) return base;
  std::vector<Element> out;
  const GammaKind& g = t.gamma_kind();
  for (long k : {-1L, 0L, 1L}) {
    std::vector<Rational> c(static_cast<std::size_t>(g.width));
    c[0] = k;
    GammaValue gv(c);
    for (const auto& b : base) out.push_back(ext_elem(b, gv));
  }
  return out;
}

GammaExt modulus(const Element& a) {
  if (a.is_zero()) return GammaExt::infinity();
  return GammaExt(a.gamma());
}

Element theta(const Element& a) {
  if (a.is_zero()) return {};
  return Element(a.base());
}

int compare(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return 0;
    return a.is_zero() ? -1 : 1;
  }
  if (int c = compare_base(a.base(), b.base())) return c;
  if (a.has_gamma() && b.has_gamma()) {
    auto o = a.gamma() <=> b.gamma();
    if (o < 0) return -1;
    if (o > 0) return 1;
  }
  return 0;
}

std::string to_string(const Tract& t, const Element& a) {
  if (a.is_zero()) return t.is_extension() ? "inf" : "0";
  if (t.is_extension()) return "(" + base_to_string(a.base()) + "," + a.gamma().to_string() + ")";
  return base_to_string(a.base());
}

std::string to_string(const Tract& t, std::span<const Element> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(t, v[i]);
  }
  return s + "]";
}

TractMap make_map(Hom h, const Tract& source, const GammaKind& gamma) {
  switch (h) {
    case Hom::TrivialToK:
      return {"trivial", source, Tract::krasner(), true, [](const Element& a) {
                return a.is_zero() ? Element() : krasner_one();
              }};
    case Hom::Modulus: {
      if (!source.is_extension()) throw PreconditionError("modulus needs a tropical extension");
      Tract target = Tract::extension(Tract::krasner(), source.gamma_kind());
      return {"modulus", source, target, true, [](const Element& a) {
                return a.is_zero() ? Element() : Element(KrasnerOne{}, a.gamma());
              }};
    }
    case Hom::EmbedIntoExtension: {
      if (source.is_extension()) throw PreconditionError("cannot embed an extension again");
      Tract target = Tract::extension(source, gamma);
      GammaValue zero = GammaValue::zero(gamma);
      return {"embed", source, target, true, [zero](const Element& a) {
                return a.is_zero() ? Element() : Element(a.base(), zero);
              }};
    }
    case Hom::ThetaProjection:
      if (!source.is_extension()) throw PreconditionError("theta needs a tropical extension");
      return {"theta", source, source.base(), false, [](const Element& a) { return theta(a); }};
  }
  throw PreconditionError("unknown homomorphism");
}

Element hom_apply(const TractMap& m, const Element& a) {
  validate(m.source, a);
  return m(a);
}

AxiomReport check_tract_axioms(const Tract& t, std::span<const Element> units, int max_len,
                               NullPredicate predicate) {
  if (!predicate) predicate = [&t](std::span<const Element> s) { return is_null(t, s); };
  for (const auto& u : units) {
    if (u.is_zero()) throw PreconditionError("axiom samples must be units");
    validate(t, u);
  }
  AxiomReport rep;
  auto fail = [&](const char* axiom, std::string witness) {
    rep.ok = false;
    rep.failed_axiom = axiom;
    rep.witness = std::move(witness);
    return rep;
  };
  Element e = one(t);
  if (!predicate({})) return fail("T1", "empty sum is not null");
  {
    Element single[1] = {e};
    if (predicate(single)) return fail("T2", "1 is null");
  }
  std::vector<Element> candidates(units.begin(), units.end());
  Element m1 = minus_one(t);
  if (std::find(candidates.begin(), candidates.end(), m1) == candidates.end()) {
    candidates.push_back(m1);
  }
  int inverses = 0;
  for (const auto& u : candidates) {
    Element pair[2] = {e, u};
    if (predicate(pair)) {
      ++inverses;
      if (!(u == m1)) return fail("T3", "1 + " + to_string(t, u) + " is null");
    }
  }
  if (inverses != 1) return fail("T3", "additive inverse of 1 not unique");

  // T4: N_F is closed under scaling by units.
  std::vector<std::size_t> idx;
  std::vector<Element> sum, scaled;
  std::function<AxiomReport*(std::size_t)> rec = [&](std::size_t start) -> AxiomReport* {
    sum.clear();
    for (auto i : idx) sum.push_back(units[i]);
    bool base_null = predicate(sum);
    for (const auto& c : units) {
      scaled.clear();
      for (const auto& a : sum) scaled.push_back(mul(t, c, a));
      if (predicate(scaled) != base_null) {
        fail("T4", to_string(t, sum) + " scaled by " + to_string(t, c));
        return &rep;
      }
    }
    if (static_cast<int>(idx.size()) == max_len) return nullptr;
    for (std::size_t i = start; i < units.size(); ++i) {
      idx.push_back(i);
      if (AxiomReport* r = rec(i)) return r;
      idx.pop_back();
    }
    return nullptr;
  };
  rec(0);
  return rep;
}

}  // namespace tracta
