#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tracta/linear_space.hpp"
#include "tracta/matroid.hpp"
#include "tracta/series.hpp"

namespace tracta {

enum class ValuationKind { Val, Sval, Fval };

ValuationKind parse_valuation_kind(const std::string& name);
std::string to_string(ValuationKind kind);

/// K[Γ], S[Γ] or Q[Γ].
Tract valuation_target(ValuationKind kind, const GammaKind& gamma = GammaKind::rational());

/// (1, lp), (sgn lc, lp) or (lc, lp); ∞ for the zero series.
Element valuate(ValuationKind kind, const HahnSeries& a, const GammaKind& gamma = GammaKind::rational());
Element valuate(ValuationKind kind, const Element& a, const GammaKind& gamma = GammaKind::rational());

TractMap valuation_map(ValuationKind kind, const GammaKind& gamma = GammaKind::rational());

/// Maximal minors in lexicographic column order, canonically scaled.
/// Throws PreconditionError if the rows are dependent.
PluckerVector plucker_from_matrix(const SeriesMatrix& a);

PluckerVector tropicalize_matroid(const PluckerVector& p, ValuationKind kind,
                                  const GammaKind& gamma = GammaKind::rational());

/// lc(C_i) on the minimizers of lp(C_i) + u_i; cross-checked against initial_circuit∘fval.
TractVector initial_form(std::span<const Element> c, std::span<const GammaExt> u);

struct TropicalisationReport {
  int trials = 0;
  int contained = 0;
  std::vector<TractVector> escaped;     // ν(x) for row-space x failing charB
  std::size_t grid_members = 0;
  std::size_t matched = 0;
  std::vector<TractVector> unresolved;  // grid members with no preimage found
  bool ok() const { return contained == trials && unresolved.empty(); }
};

/// ⊆: random exact row combinations are valuated and tested with charB.
/// ⊇: each charB member of the grid gets an exact preimage search in the row space.
TropicalisationReport sample_and_check_tropicalisation(const SeriesMatrix& a, ValuationKind kind,
                                                       int trials, const SampleGrid& grid,
                                                       std::uint64_t seed = 1,
                                                       const GammaKind& gamma = GammaKind::rational());

}  // namespace tracta
