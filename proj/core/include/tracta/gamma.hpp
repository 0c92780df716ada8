#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tracta/rational.hpp"

namespace tracta {

/// Totally ordered abelian groups: Z, Q, and Q^k under lexicographic order.
struct GammaKind {
  enum class Tag { Int, Rational, Lex };
  Tag tag = Tag::Int;
  int width = 1;

  static GammaKind integer() { return {Tag::Int, 1}; }
  static GammaKind rational() { return {Tag::Rational, 1}; }
  static GammaKind lex(int k);

  std::string name() const;
  friend bool operator==(const GammaKind&, const GammaKind&) = default;
};

class GammaValue {
 public:
  GammaValue() : c_(1) {}
  explicit GammaValue(Rational q) : c_{std::move(q)} { c_.front().canonicalize(); }
  explicit GammaValue(std::vector<Rational> components);

  static GammaValue zero(const GammaKind& kind);
  static GammaValue from_int(long v) { return GammaValue(Rational(v)); }

  int width() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& components() const { return c_; }
  bool is_zero() const;

  /// Throws TractMismatch if the value does not belong to `kind`.
  void check_kind(const GammaKind& kind) const;

  friend GammaValue operator+(const GammaValue& a, const GammaValue& b);
  friend GammaValue operator-(const GammaValue& a, const GammaValue& b);
  friend GammaValue operator-(const GammaValue& a);
  GammaValue& operator+=(const GammaValue& b);
  friend GammaValue operator*(long k, const GammaValue& a);

  friend bool operator==(const GammaValue& a, const GammaValue& b);
  friend std::strong_ordering operator<=>(const GammaValue& a, const GammaValue& b);

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

/// Γ ∪ {∞}; ∞ is larger than every finite value and absorbs addition.
class GammaExt {
 public:
  GammaExt() = default;  // ∞
  GammaExt(GammaValue v) : v_(std::move(v)) {}

  static GammaExt infinity() { return GammaExt(); }
  bool is_infinite() const { return !v_.has_value(); }
  bool is_finite() const { return v_.has_value(); }
  const GammaValue& value() const;

  friend GammaExt operator+(const GammaExt& a, const GammaExt& b);
  /// Throws PreconditionError on ∞.
  GammaExt negated() const;

  friend bool operator==(const GammaExt& a, const GammaExt& b);
  friend std::strong_ordering operator<=>(const GammaExt& a, const GammaExt& b);

  std::string to_string() const;

 private:
  std::optional<GammaValue> v_;
};

GammaExt gamma_min(const GammaExt& a, const GammaExt& b);

/// Indices of all minimal entries; empty if every entry is ∞.
std::vector<std::size_t> argmin_set(std::span<const GammaExt> xs);

}  // namespace tracta
