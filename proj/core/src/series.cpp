#include "tracta/series.hpp"

#include <algorithm>
#include <map>

#include "tracta/errors.hpp"

namespace tracta {

namespace {

struct ExpLess {
  bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

std::vector<HahnSeries::Term> normalize(std::vector<HahnSeries::Term> in) {
  std::map<Rational, Rational, ExpLess> acc;
  for (auto& t : in) {
    t.exp.canonicalize();
    t.coeff.canonicalize();
    acc[t.exp] += t.coeff;
  }
  std::vector<HahnSeries::Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) out.push_back({e, c});
  }
  return out;
}

}  // namespace

HahnSeries::HahnSeries(const Rational& constant)
    : terms_(normalize({{Rational(0), constant}})) {}

HahnSeries::HahnSeries(std::vector<Term> terms) : terms_(normalize(std::move(terms))) {}

HahnSeries HahnSeries::monomial(const Rational& coeff, const Rational& exp) {
  return HahnSeries(std::vector<Term>{{exp, coeff}});
}

const Rational& HahnSeries::leading_exp() const {
  if (is_zero()) throw PreconditionError("zero series has no leading term");
  return terms_.front().exp;
}

const Rational& HahnSeries::leading_coeff() const {
  if (is_zero()) throw PreconditionError("zero series has no leading term");
  return terms_.front().coeff;
}

HahnSeries& HahnSeries::operator+=(const HahnSeries& b) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != terms_.end() && cmp(i->exp, j->exp) < 0)) {
      merged.push_back(*i++);
    } else if (i == terms_.end() || cmp(j->exp, i->exp) < 0) {
      merged.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) merged.push_back({i->exp, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

HahnSeries operator+(const HahnSeries& a, const HahnSeries& b) {
  HahnSeries r = a;
  r += b;
  return r;
}

HahnSeries operator-(const HahnSeries& a) { return a.scaled(-1); }

HahnSeries operator-(const HahnSeries& a, const HahnSeries& b) { return a + (-b); }

HahnSeries operator*(const HahnSeries& a, const HahnSeries& b) {
  std::vector<HahnSeries::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({x.exp + y.exp, x.coeff * y.coeff});
  }
  return HahnSeries(std::move(prod));
}

HahnSeries HahnSeries::scaled(const Rational& c) const {
  if (c == 0) return {};
  HahnSeries r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

HahnSeries HahnSeries::monomial_inverse() const {
  if (!is_monomial()) {
    throw PreconditionError("series division is only supported for monomials, got " + to_string());
  }
  Rational c = 1 / terms_[0].coeff;
  return monomial(c, -terms_[0].exp);
}

std::string HahnSeries::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? "-" : "+";
    }
    first = false;
    bool constant = t.exp == 0;
    if (constant || c != 1) s += tracta::to_string(c);
    if (!constant) {
      s += "t";
      if (t.exp != 1) s += "^" + tracta::to_string(t.exp);
    }
  }
  return s;
}

HahnSeries determinant(const SeriesMatrix& m) {
  const std::size_t d = m.size();
  for (const auto& row : m) {
    if (row.size() != d) throw PreconditionError("determinant of a non-square matrix");
  }
  if (d == 0) return HahnSeries(1);
  if (d == 1) return m[0][0];
  HahnSeries det;
  for (std::size_t col = 0; col < d; ++col) {
    if (m[0][col].is_zero()) continue;
    SeriesMatrix minor(d - 1);
    for (std::size_t r = 1; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        if (c != col) minor[r - 1].push_back(m[r][c]);
      }
    }
    HahnSeries term = m[0][col] * determinant(minor);
    if (col % 2 == 1) term = -term;
    det += term;
  }
  return det;
}

}  // namespace tracta
