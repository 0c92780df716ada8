#pragma once

#include <random>
#include <vector>

#include "tracta/flag.hpp"
#include "tracta/matroid.hpp"
#include "tracta/series.hpp"
#include "tracta/valuation.hpp"

namespace tracta::demo {

/// The 2×4 running example [[1,0,-2,2],[0,1,-1,1-t]].
SeriesMatrix pn_matrix();
/// Its first row, a rank-1 quotient.
SeriesMatrix pn_first_row();

PluckerVector pn_plucker();
PluckerVector pn_valuated(ValuationKind kind, const GammaKind& gamma = GammaKind::rational());

/// Rank-(1,2) flag over the Hahn field.
FlagSequence pn_flag();

/// V[Z]-matroid on six elements that is weak but not strong.
PluckerVector triangle_matroid(long delta);

/// Rank-2 S[Z] Plücker vector on three elements with signs (-,-,+).
PluckerVector signed_three();

/// [[1,1,t,0],[0,1,1,1]]; nonnegative after sval.
SeriesMatrix positroid_matrix();
/// The same with the first column negated.
SeriesMatrix flipped_positroid_matrix();

/// Direction with integer coordinates.
DirectionU int_direction(const std::vector<long>& values);
/// Direction with rational coordinates; "inf" entries become ∞.
DirectionU rational_direction(const std::vector<const char*>& values);

/// The seven region representatives of the sval covector table, in order [1]..[7].
std::vector<DirectionU> region_directions();

/// One or two terms with integer exponents in [0,2] and small nonzero coefficients.
HahnSeries random_series(std::mt19937_64& rng);
/// Entries are zero with probability 1/5. The result has full row rank.
SeriesMatrix random_full_rank(std::mt19937_64& rng, int rows, int cols);
/// Uniform integers in [lo,hi] per coordinate.
DirectionU random_int_direction(std::mt19937_64& rng, int n, long lo, long hi);

}  // namespace tracta::demo
