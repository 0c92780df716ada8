#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tracta/rational.hpp"

namespace tracta {

/// Finite-support series Σ c_e t^e with rational exponents and coefficients.
class HahnSeries {
 public:
  struct Term {
    Rational exp;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  HahnSeries() = default;
  HahnSeries(const Rational& constant);
  HahnSeries(long constant) : HahnSeries(Rational(constant)) {}
  /// Terms may be unsorted or repeated; they are combined.
  explicit HahnSeries(std::vector<Term> terms);

  static HahnSeries monomial(const Rational& coeff, const Rational& exp);
  static HahnSeries t() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Sorted by increasing exponent, all coefficients nonzero.
  const std::vector<Term>& terms() const { return terms_; }

  /// Smallest exponent with nonzero coefficient. Precondition: nonzero.
  const Rational& leading_exp() const;
  const Rational& leading_coeff() const;

  friend HahnSeries operator+(const HahnSeries& a, const HahnSeries& b);
  friend HahnSeries operator-(const HahnSeries& a, const HahnSeries& b);
  friend HahnSeries operator-(const HahnSeries& a);
  friend HahnSeries operator*(const HahnSeries& a, const HahnSeries& b);
  HahnSeries& operator+=(const HahnSeries& b);
  HahnSeries scaled(const Rational& c) const;

  /// Inverse of a monomial; throws PreconditionError for other series.
  HahnSeries monomial_inverse() const;

  friend bool operator==(const HahnSeries&, const HahnSeries&) = default;

  /// Compact form such as "1-t" or "2t^1/2".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

using SeriesMatrix = std::vector<std::vector<HahnSeries>>;

/// Determinant by Laplace expansion along the first row.
HahnSeries determinant(const SeriesMatrix& m);

}  // namespace tracta
