#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tracta/subset.hpp"
#include "tracta/tract.hpp"

namespace tracta {

/// Function from r-subsets of {0..n-1} to a tract.
class PluckerVector {
 public:
  PluckerVector(Tract tract, int n, int r);

  const Tract& tract() const { return tract_; }
  int n() const { return n_; }
  int rank() const { return r_; }

  const Element& operator[](Subset s) const;
  void set(Subset s, Element value);

  bool is_zero_function() const;
  /// r-subsets with nonzero value, in lexicographic order.
  std::vector<Subset> support() const;

  friend bool operator==(const PluckerVector&, const PluckerVector&) = default;

 private:
  std::size_t index(Subset s) const;
  Tract tract_;
  int n_;
  int r_;
  std::vector<Element> entries_;
};

/// Scales so that the lexicographically first nonzero entry is canonical.
PluckerVector normalized(const PluckerVector& p);
/// Equal up to a global unit.
bool plucker_equivalent(const PluckerVector& p, const PluckerVector& q);

/// (-1)^ℓ with ℓ = #{j' ∈ J : j < j'} + #{i ∈ I : j < i}.
int incidence_sign(int j, Subset I, Subset J);

/// Terms of Σ_{j ∈ J∖I} sign(j;I,J)·P(I+j)·Q(J-j). P has rank |I|+1, Q rank |J|-1.
FormalSum relation_terms(const PluckerVector& p, const PluckerVector& q, Subset I, Subset J);
bool relation_holds(const PluckerVector& p, const PluckerVector& q, Subset I, Subset J);

enum class Strength { Weak, Strong };

struct RelationFailure {
  Subset I;
  Subset J;
  friend bool operator==(const RelationFailure&, const RelationFailure&) = default;
};

struct PluckerReport {
  bool nonzero = false;
  bool ok = false;
  std::vector<RelationFailure> failures;
};

/// GP1 plus the three-term relations (Weak) or all relations (Strong).
PluckerReport check_plucker(const PluckerVector& p, Strength strength, bool all_failures = false);
bool is_weak_matroid(const PluckerVector& p);
bool is_strong_matroid(const PluckerVector& p);

std::vector<Subset> underlying_bases(const PluckerVector& p);
/// Rank of A in the underlying matroid.
int underlying_rank(const PluckerVector& p, Subset a);

struct CircuitSet {
  Tract tract;
  int n = 0;
  std::vector<TractVector> vectors;
};

Subset support(std::span<const Element> x);
/// First nonzero coordinate made canonical (the identity, or leading term 1 for series).
TractVector canonical(const Tract& t, TractVector x);
/// Canonicalizes, drops zero vectors and proportional duplicates, sorts.
CircuitSet make_vector_set(const Tract& t, int n, std::vector<TractVector> vectors);
/// Same set of vectors up to scaling.
bool same_vectors(const CircuitSet& a, const CircuitSet& b);

/// (C_τ)_{i_s} = (-1)^s P(τ - i_s) over (r+1)-subsets τ. Throws IntegrityError
/// if the resulting supports are not pairwise incomparable.
CircuitSet circuits(const PluckerVector& p);
CircuitSet cocircuits(const PluckerVector& p);

PluckerVector dual(const PluckerVector& p);

FormalSum inner_terms(const Tract& t, std::span<const Element> x, std::span<const Element> y);
bool is_orthogonal(const Tract& t, std::span<const Element> x, std::span<const Element> y);
bool is_covector(const CircuitSet& c, std::span<const Element> x);
bool is_covector(const PluckerVector& p, std::span<const Element> x);

/// Nonzero vectors whose support is minimal among the inputs.
std::vector<TractVector> min_supp(std::vector<TractVector> vectors);

/// Drops the coordinates in A.
TractVector restrict_vector(std::span<const Element> x, Subset a);
/// Inverse of restrict_vector: inserts zeros at A in a ground set of x.size()+|A|.
TractVector embed_vector(std::span<const Element> x, Subset a);

CircuitSet deletion(const CircuitSet& c, Subset a);
CircuitSet contraction(const CircuitSet& c, Subset a);
PluckerVector contraction(const PluckerVector& p, Subset a);
PluckerVector deletion(const PluckerVector& p, Subset a);

/// A lists the new elements' positions in a ground set of size n+|A|.
PluckerVector add_loops(const PluckerVector& p, Subset a);
PluckerVector add_coloops(const PluckerVector& p, Subset a);
CircuitSet add_loops(const CircuitSet& c, Subset a);
CircuitSet add_coloops(const CircuitSet& c, Subset a);

PluckerVector pushforward(const PluckerVector& p, const TractMap& f);
CircuitSet pushforward(const CircuitSet& c, const TractMap& f);

/// Cocircuit supported in (E∖B)∪{j} with coordinate j equal to 1.
TractVector fundamental_cocircuit(const PluckerVector& p, Subset basis, int j);

/// Coefficients α ∈ domain^k with X_i ∈ ⊞_g α_g Y_{g,i} for every i, if any.
std::optional<std::vector<Element>> span_contains(const Tract& t,
                                                  std::span<const TractVector> generators,
                                                  std::span<const Element> x,
                                                  std::span<const Element> domain);

}  // namespace tracta
