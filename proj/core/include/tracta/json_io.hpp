#pragma once

#include <json.hpp>

#include "tracta/flag.hpp"
#include "tracta/initial.hpp"
#include "tracta/linear_space.hpp"
#include "tracta/matroid.hpp"
#include "tracta/valuation.hpp"

namespace tracta::io {

using json = nlohmann::json;

/// "K", "S", "V", "U0", "D", "Hahn", "Q", or {"base": ..., "gamma": "Z" | "Q" | {"lex": k}}.
json to_json(const Tract& t);
Tract tract_from_json(const json& j);

json to_json(const GammaKind& g);
GammaKind gamma_kind_from_json(const json& j);

/// Integers as numbers, rationals as "p/q", lex tuples as arrays, ∞ as "inf".
json to_json(const GammaExt& g, const GammaKind& kind);
GammaExt gamma_from_json(const json& j, const GammaKind& kind);

json to_json(const HahnSeries& s);
HahnSeries series_from_json(const json& j);

json to_json(const Tract& t, const Element& a);
Element element_from_json(const Tract& t, const json& j);

json to_json(const Tract& t, std::span<const Element> v);
TractVector vector_from_json(const Tract& t, const json& j);

json to_json(const PluckerVector& p);
/// Throws SchemaError on malformed input, and on an all-zero vector if require_nonzero.
PluckerVector plucker_from_json(const json& j, bool require_nonzero = true);

json to_json(const CircuitSet& c);
CircuitSet circuits_from_json(const json& j);

json to_json(std::span<const GammaExt> u, const GammaKind& kind);
DirectionU direction_from_json(const json& j, const GammaKind& kind);

json to_json(const FlagSequence& f);
FlagSequence flag_from_json(const json& j);

json to_json(const TractOrdering& o);
TractOrdering ordering_from_json(const Tract& t, const json& j);

json to_json(const SeriesMatrix& a);
SeriesMatrix matrix_from_json(const json& j);

/// {"gammas": [...]} for every coordinate or {"per_coordinate": [[...], ...]}, plus
/// optional "units" (base elements; defaults to all units of a finite base).
SampleGrid grid_from_json(const Tract& ext, int n, const json& j);

json to_json(const PluckerReport& r);
json to_json(const Tract& t, const PointVerdict& v);

/// Parses text, mapping parse failures to SchemaError.
json parse(const std::string& text);

}  // namespace tracta::io
