#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tracta/initial.hpp"
#include "tracta/matroid.hpp"

namespace tracta {

/// Finite stand-in for F[Γ]^E: per-coordinate Γ ∪ {∞} values and base units.
struct SampleGrid {
  std::vector<std::vector<GammaExt>> gammas;
  std::vector<Element> base_units;
};

SampleGrid uniform_grid(int n, std::vector<GammaExt> gammas, std::vector<Element> base_units);
std::uint64_t grid_size(const SampleGrid& grid);
/// Every grid point in F[Γ]^n; throws GuardExceeded past the guard.
std::vector<TractVector> grid_points(const Tract& ext, const SampleGrid& grid);

bool member_charA(const PluckerVector& p, std::span<const Element> x);
bool member_charB(const PluckerVector& p, std::span<const Element> x);
bool member_charC(const PluckerVector& p, std::span<const Element> x);
bool member_charD(const PluckerVector& p, std::span<const Element> x,
                  std::span<const Element> scalar_domain);

/// {0} ∪ units × grid values; nullopt when the base tract is infinite.
std::optional<std::vector<Element>> default_scalar_domain(const Tract& ext, const SampleGrid& grid);

/// K base: M^{|X|} has no loops.
bool initial_loopless(const PluckerVector& p, std::span<const Element> x);
/// S base: sgn(X) is non-conformal with every nonzero C^{|X|} and with its negation.
bool nonconformal_test(const PluckerVector& p, std::span<const Element> x);

/// Membership in the tropical span: X = min_D (α_D + D) over the given cocircuits.
bool tspan_member_K(const CircuitSet& cocircuits, std::span<const Element> x);

struct PointVerdict {
  TractVector point;
  bool toric = false;
  bool charA = false;
  bool charB = false;
  bool charC = false;
  std::optional<bool> charD;
  bool agree() const { return charA == charB && charB == charC && (!charD || *charD == charB); }
};

/// Caches circuits, contractions and fundamental cocircuits for repeated membership tests.
class LinearSpace {
 public:
  explicit LinearSpace(PluckerVector p);

  const PluckerVector& plucker() const { return p_; }
  const CircuitSet& circuit_set() const { return circuits_; }

  bool charA(std::span<const Element> x);
  bool charB(std::span<const Element> x) const;
  bool charC(std::span<const Element> x) const;
  bool charD(std::span<const Element> x, std::span<const Element> scalar_domain);

  PointVerdict evaluate(const TractVector& x, const std::vector<Element>* scalar_domain);

 private:
  PluckerVector p_;
  CircuitSet circuits_;
  std::map<std::uint32_t, CircuitSet> contractions_;
  std::vector<std::pair<Subset, std::vector<TractVector>>> fundamental_;
};

/// One verdict per grid point, in grid order. charD is evaluated when the base is finite.
std::vector<PointVerdict> enumerate_linear_space(const PluckerVector& p, const SampleGrid& grid);

}  // namespace tracta
