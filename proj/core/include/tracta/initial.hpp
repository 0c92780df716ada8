#pragma once

#include <span>
#include <string>
#include <vector>

#include "tracta/matroid.hpp"

namespace tracta {

/// A direction u ∈ (Γ ∪ {∞})^E.
using DirectionU = std::vector<GammaExt>;

/// Coordinates with u_i = ∞.
Subset infinite_part(std::span<const GammaExt> u);
bool is_toric(std::span<const GammaExt> u);

/// θ(P(B)) where |P(B)| - Σ_{i∈B} u_i is minimal, zero elsewhere. u must be finite.
PluckerVector toric_initial(const PluckerVector& p, std::span<const GammaExt> u);

struct InitialMatroid {
  PluckerVector plucker;
  CircuitSet circuits;
};

/// Contracts Z_u, takes the toric initial, and re-adds Z_u as coloops.
InitialMatroid initial(const PluckerVector& p, std::span<const GammaExt> u);

/// θ(C_i) on the finite minimizers of |C_i| + u_i.
TractVector initial_circuit(std::span<const Element> c, std::span<const GammaExt> u);

/// MinSupp of the initial circuits, cross-checked against circuits(initial(P,u)).
CircuitSet initial_circuits_of(const PluckerVector& p, std::span<const GammaExt> u);

/// dual(P^u) and (P*)^{-u} agree up to a global unit. u must be finite.
bool initial_dual_check(const PluckerVector& p, std::span<const GammaExt> u);

/// Direction whose toric initial violates the failing three-term relation (I,J).
DirectionU witness_u(const PluckerVector& p, Subset I, Subset J);

/// Every u ∈ values^n, guarded.
std::vector<DirectionU> direction_grid(int n, std::span<const GammaExt> values);

struct InitialSample {
  DirectionU u;
  bool weak = false;
  bool strong = false;
};

struct WitnessRecord {
  RelationFailure relation;
  DirectionU u;
  bool initial_fails = false;
};

struct ThmAReport {
  bool weak = false;
  bool strong = false;
  std::vector<InitialSample> samples;
  std::vector<WitnessRecord> witnesses;
  bool weak_propagates = true;   // P weak implies every sampled initial weak
  bool witnesses_fail = true;    // each witness initial fails its relation
  bool perfect_agrees = true;    // perfect base: weak == strong everywhere
  bool ok() const { return weak_propagates && witnesses_fail && perfect_agrees; }
};

ThmAReport verify_thmA(const PluckerVector& p, std::span<const DirectionU> extra_u);

std::string to_string(std::span<const GammaExt> u);

}  // namespace tracta
