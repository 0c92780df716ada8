#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tracta/gamma.hpp"
#include "tracta/rational.hpp"
#include "tracta/series.hpp"

namespace tracta {

enum class TractKind {
  Krasner,
  Sign,
  TriangleV,
  RegularPF,
  DyadicPF,
  HahnField,
  RationalField,
  Extension
};

/// Describes a tract; elements do not carry their tract.
class Tract {
 public:
  static Tract krasner() { return Tract(TractKind::Krasner); }
  static Tract sign() { return Tract(TractKind::Sign); }
  static Tract triangle() { return Tract(TractKind::TriangleV); }
  static Tract regular() { return Tract(TractKind::RegularPF); }
  static Tract dyadic() { return Tract(TractKind::DyadicPF); }
  static Tract hahn() { return Tract(TractKind::HahnField); }
  static Tract rationals() { return Tract(TractKind::RationalField); }
  static Tract of_kind(TractKind kind);
  /// F[Γ]; nesting is not supported.
  static Tract extension(const Tract& base, const GammaKind& gamma);

  TractKind kind() const { return kind_; }
  bool is_extension() const { return kind_ == TractKind::Extension; }
  TractKind base_kind() const { return is_extension() ? base_kind_ : kind_; }
  Tract base() const;
  const GammaKind& gamma_kind() const;

  /// Weak and strong matroids coincide; for F[Γ] this is inherited from F.
  bool is_perfect() const;
  /// K, S, U0 and their extensions have finitely many base units.
  bool has_finite_base() const;

  std::string name() const;
  friend bool operator==(const Tract&, const Tract&) = default;

 private:
  explicit Tract(TractKind k) : kind_(k), base_kind_(k) {}
  TractKind kind_;
  TractKind base_kind_;
  GammaKind gamma_{};
};

struct KrasnerOne {
  friend bool operator==(const KrasnerOne&, const KrasnerOne&) = default;
};
struct SignUnit {
  int s;  // ±1
  friend bool operator==(const SignUnit&, const SignUnit&) = default;
};
struct DyadicUnit {
  int sign;  // ±1
  long exp;  // value sign·2^exp
  friend bool operator==(const DyadicUnit&, const DyadicUnit&) = default;
};

/// Sign and RegularPF use SignUnit; TriangleV and RationalField use Rational.
using BaseUnit = std::variant<KrasnerOne, SignUnit, Rational, DyadicUnit, HahnSeries>;

/// Zero, or a unit: a base payload plus a group value for extension tracts.
class Element {
 public:
  Element() = default;
  explicit Element(BaseUnit base) : base_(std::move(base)) {}
  Element(BaseUnit base, GammaValue gamma) : base_(std::move(base)), gamma_(std::move(gamma)) {}

  static Element zero() { return {}; }
  bool is_zero() const { return !base_.has_value(); }
  const BaseUnit& base() const;
  bool has_gamma() const { return gamma_.has_value(); }
  const GammaValue& gamma() const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  std::optional<BaseUnit> base_;
  std::optional<GammaValue> gamma_;
};

using FormalSum = std::vector<Element>;
using TractVector = std::vector<Element>;

Element krasner_one();
Element sign_elem(int s);
Element rational_elem(const Rational& q);
Element dyadic_elem(int sign, long exp);
/// The zero series maps to the zero element.
Element series_elem(const HahnSeries& s);
/// (a, γ); a zero base gives the zero element.
Element ext_elem(const Element& base, const GammaValue& gamma);

/// Throws TractMismatch if `a` is not an element of `t`.
void validate(const Tract& t, const Element& a);

Element one(const Tract& t);
Element minus_one(const Tract& t);
Element mul(const Tract& t, const Element& a, const Element& b);
/// Precondition: unit. Hahn series must be monomials.
Element inv(const Tract& t, const Element& a);
Element neg(const Tract& t, const Element& a);
/// The involution; the identity on every supported tract.
Element conj(const Tract& t, const Element& a);

/// Null-set membership. Zero terms are dropped before testing.
bool is_null(const Tract& t, std::span<const Element> terms);

/// a ∈ b ⊞ c, i.e. is_null({b, c, -a}).
bool hypersum_contains(const Tract& t, const Element& a, const Element& b, const Element& c);

/// Unit u with u·a of canonical form: inv(a), or the inverse leading monomial for series.
Element normalizer(const Tract& t, const Element& a);

/// X = c·Y for some unit c.
bool proportional(const Tract& t, std::span<const Element> x, std::span<const Element> y);

/// All units of a finite tract (K, S, U0).
std::vector<Element> finite_units(const Tract& t);

/// All units of a finite tract, or a small fixed sample of an infinite one.
std::vector<Element> sample_units(const Tract& t);

/// Modulus |a| of an extension element; ∞ for zero.
GammaExt modulus(const Element& a);
/// θ(a): base part of an extension element; zero for zero.
Element theta(const Element& a);

/// Total order for deterministic output: zero first, then by payload, then by γ.
int compare(const Element& a, const Element& b);

std::string to_string(const Tract& t, const Element& a);
std::string to_string(const Tract& t, std::span<const Element> v);

struct TractMap {
  std::string name;
  Tract source;
  Tract target;
  bool homomorphism = true;
  std::function<Element(const Element&)> fn;

  Element operator()(const Element& a) const { return fn(a); }
};

enum class Hom { TrivialToK, Modulus, EmbedIntoExtension, ThetaProjection };

/// `gamma` is used only by EmbedIntoExtension.
TractMap make_map(Hom h, const Tract& source, const GammaKind& gamma = GammaKind::integer());
Element hom_apply(const TractMap& m, const Element& a);

using NullPredicate = std::function<bool(std::span<const Element>)>;

struct AxiomReport {
  bool ok = true;
  std::string failed_axiom;
  std::string witness;
};

/// Samples T1-T4 over all multisets of `units` of length ≤ max_len.
/// A custom predicate replaces is_null, for negative controls.
AxiomReport check_tract_axioms(const Tract& t, std::span<const Element> units, int max_len = 3,
                               NullPredicate predicate = {});

}  // namespace tracta
