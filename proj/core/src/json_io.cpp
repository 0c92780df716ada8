#include "tracta/json_io.hpp"

#include "tracta/errors.hpp"

namespace tracta::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw SchemaError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) schema(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  schema("expected a rational as an integer or \"p/q\" string, got " + j.dump());
}

struct KindName {
  TractKind kind;
  const char* name;
};
constexpr KindName kKinds[] = {
    {TractKind::Krasner, "K"},        {TractKind::Sign, "S"},      {TractKind::TriangleV, "V"},
    {TractKind::RegularPF, "U0"},     {TractKind::DyadicPF, "D"},  {TractKind::HahnField, "Hahn"},
    {TractKind::RationalField, "Q"},
};

Tract base_from_name(const json& j) {
  if (!j.is_string()) schema("tract must be a name or an extension object");
  std::string s = j.get<std::string>();
  for (const auto& k : kKinds) {
    if (s == k.name) return Tract::of_kind(k.kind);
  }
  schema("unknown tract '" + s + "'");
}

bool is_minus(const std::string& s) { return s == "-" || s == "−"; }

json base_to_json(const Tract& base, const Element& a) {
  if (a.is_zero()) return base.kind() == TractKind::HahnField ? json::array() : json("0");
  const BaseUnit& u = a.base();
  switch (base.kind()) {
    case TractKind::Krasner:
      return "1";
    case TractKind::Sign:
    case TractKind::RegularPF:
      return std::get<SignUnit>(u).s > 0 ? "+" : "-";
    case TractKind::TriangleV:
    case TractKind::RationalField:
      return to_string(std::get<Rational>(u));
    case TractKind::DyadicPF: {
      const auto& d = std::get<DyadicUnit>(u);
      return json{{"sign", d.sign}, {"exp", d.exp}};
    }
    case TractKind::HahnField:
      return to_json(std::get<HahnSeries>(u));
    case TractKind::Extension:
      break;
  }
  schema("nested extension");
}

Element base_from_json(const Tract& base, const json& j) {
  Element e;
  switch (base.kind()) {
    case TractKind::Krasner:
      if (j == "1") e = krasner_one();
      else if (j != "0") schema("Krasner element must be \"0\" or \"1\"");
      break;
    case TractKind::Sign:
    case TractKind::RegularPF: {
      if (!j.is_string()) schema("sign element must be \"+\", \"0\" or \"-\"");
      std::string s = j.get<std::string>();
      if (s == "+") e = sign_elem(1);
      else if (is_minus(s)) e = sign_elem(-1);
      else if (s != "0") schema("sign element must be \"+\", \"0\" or \"-\"");
      break;
    }
    case TractKind::TriangleV:
    case TractKind::RationalField:
      e = rational_elem(rational_from(j));
      break;
    case TractKind::DyadicPF:
      if (j == "0") break;
      if (!j.is_object()) schema("dyadic element must be {\"sign\":±1,\"exp\":k} or \"0\"");
      e = dyadic_elem(int_field(j, "sign"), int_field(j, "exp"));
      break;
    case TractKind::HahnField:
      e = series_elem(series_from_json(j));
      break;
    case TractKind::Extension:
      schema("nested extension");
  }
  try {
    validate(base, e);
  } catch (const TractMismatch& ex) {
    schema(ex.what());
  }
  return e;
}

}  // namespace

json to_json(const GammaKind& g) {
  switch (g.tag) {
    case GammaKind::Tag::Int:
      return "Z";
    case GammaKind::Tag::Rational:
      return "Q";
    case GammaKind::Tag::Lex:
      return json{{"lex", g.width}};
  }
  return nullptr;
}

GammaKind gamma_kind_from_json(const json& j) {
  if (j == "Z") return GammaKind::integer();
  if (j == "Q") return GammaKind::rational();
  if (j.is_object() && j.contains("lex")) {
    int k = int_field(j, "lex");
    if (k < 1) schema("lex width must be positive");
    return GammaKind::lex(k);
  }
  schema("unknown group kind " + j.dump());
}

json to_json(const Tract& t) {
  if (t.is_extension()) return json{{"base", to_json(t.base())}, {"gamma", to_json(t.gamma_kind())}};
  for (const auto& k : kKinds) {
    if (k.kind == t.kind()) return k.name;
  }
  return nullptr;
}

Tract tract_from_json(const json& j) {
  if (j.is_object()) {
    Tract base = base_from_name(field(j, "base"));
    return Tract::extension(base, gamma_kind_from_json(field(j, "gamma")));
  }
  return base_from_name(j);
}

json to_json(const GammaExt& g, const GammaKind& kind) {
  if (g.is_infinite()) return "inf";
  const GammaValue& v = g.value();
  switch (kind.tag) {
    case GammaKind::Tag::Int:
      return v[0].get_num().get_si();
    case GammaKind::Tag::Rational:
      return to_string(v[0]);
    case GammaKind::Tag::Lex: {
      json a = json::array();
      for (const auto& q : v.components()) a.push_back(to_string(q));
      return a;
    }
  }
  return nullptr;
}

GammaExt gamma_from_json(const json& j, const GammaKind& kind) {
  if (j == "inf") return GammaExt::infinity();
  GammaValue v;
  if (kind.tag == GammaKind::Tag::Lex) {
    if (!j.is_array()) schema("lex group value must be an array");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from(x));
    if (c.empty()) schema("empty lex tuple");
    v = GammaValue(std::move(c));
  } else {
    v = GammaValue(rational_from(j));
  }
  try {
    v.check_kind(kind);
  } catch (const TractMismatch& e) {
    schema(e.what());
  }
  return GammaExt(v);
}

json to_json(const HahnSeries& s) {
  json a = json::array();
  for (const auto& t : s.terms()) a.push_back(json{{"e", to_string(t.exp)}, {"c", to_string(t.coeff)}});
  return a;
}

HahnSeries series_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return HahnSeries(rational_from(j));
  if (!j.is_array()) schema("series must be an array of {\"e\",\"c\"} terms");
  std::vector<HahnSeries::Term> terms;
  for (const auto& t : j) terms.push_back({rational_from(field(t, "e")), rational_from(field(t, "c"))});
  return HahnSeries(std::move(terms));
}

json to_json(const Tract& t, const Element& a) {
  if (!t.is_extension()) return base_to_json(t, a);
  if (a.is_zero()) return "inf";
  return json{{"base", base_to_json(t.base(), theta(a))},
              {"gamma", to_json(GammaExt(a.gamma()), t.gamma_kind())}};
}

Element element_from_json(const Tract& t, const json& j) {
  if (!t.is_extension()) return base_from_json(t, j);
  if (j == "inf") return {};
  Element b = base_from_json(t.base(), field(j, "base"));
  if (b.is_zero()) schema("extension element needs a nonzero base; use \"inf\" for zero");
  GammaExt g = gamma_from_json(field(j, "gamma"), t.gamma_kind());
  if (g.is_infinite()) schema("extension element needs a finite group value");
  return ext_elem(b, g.value());
}

json to_json(const Tract& t, std::span<const Element> v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(to_json(t, e));
  return a;
}

TractVector vector_from_json(const Tract& t, const json& j) {
  if (!j.is_array()) schema("vector must be an array");
  TractVector v;
  for (const auto& x : j) v.push_back(element_from_json(t, x));
  return v;
}

json to_json(const PluckerVector& p) {
  json entries = json::array();
  for (Subset s : p.support()) entries.push_back(json{{"set", s.one_based()}, {"value", to_json(p.tract(), p[s])}});
  return json{{"tract", to_json(p.tract())}, {"n", p.n()}, {"r", p.rank()}, {"entries", entries}};
}

PluckerVector plucker_from_json(const json& j, bool require_nonzero) {
  Tract t = tract_from_json(field(j, "tract"));
  int n = int_field(j, "n");
  int r = int_field(j, "r");
  if (n < 0 || n > kMaxGround || r < 0 || r > n) schema("need 0 ≤ r ≤ n ≤ 16");
  PluckerVector p(t, n, r);
  const json& entries = field(j, "entries");
  if (!entries.is_array()) schema("entries must be an array");
  std::vector<bool> seen(binomial(n, r));
  for (const auto& e : entries) {
    const json& set = field(e, "set");
    if (!set.is_array()) schema("set must be an array of indices");
    Subset s = Subset::from_one_based(set.get<std::vector<int>>());
    if (s.size() != r || !s.subset_of(Subset::full(n))) schema("set " + set.dump() + " is not an r-subset of [n]");
    if (seen[colex_rank(s)]) schema("duplicate entry for set " + set.dump());
    seen[colex_rank(s)] = true;
    p.set(s, element_from_json(t, field(e, "value")));
  }
  if (require_nonzero && p.is_zero_function()) schema("Plücker vector is identically zero (GP1)");
  return p;
}

json to_json(const CircuitSet& c) {
  json vs = json::array();
  for (const auto& v : c.vectors) vs.push_back(to_json(c.tract, v));
  return json{{"tract", to_json(c.tract)}, {"n", c.n}, {"vectors", vs}};
}

CircuitSet circuits_from_json(const json& j) {
  Tract t = tract_from_json(field(j, "tract"));
  int n = int_field(j, "n");
  std::vector<TractVector> vs;
  const json& arr = field(j, "vectors");
  if (!arr.is_array()) schema("vectors must be an array");
  for (const auto& v : arr) {
    vs.push_back(vector_from_json(t, v));
    if (static_cast<int>(vs.back().size()) != n) schema("vector length differs from n");
  }
  return CircuitSet{t, n, std::move(vs)};
}

json to_json(std::span<const GammaExt> u, const GammaKind& kind) {
  json a = json::array();
  for (const auto& g : u) a.push_back(to_json(g, kind));
  return a;
}

DirectionU direction_from_json(const json& j, const GammaKind& kind) {
  if (!j.is_array()) schema("direction must be an array");
  DirectionU u;
  for (const auto& x : j) u.push_back(gamma_from_json(x, kind));
  return u;
}

json to_json(const FlagSequence& f) {
  json parts = json::array();
  for (const auto& p : f.parts()) parts.push_back(to_json(p));
  return json{{"parts", parts}};
}

FlagSequence flag_from_json(const json& j) {
  const json& parts = field(j, "parts");
  if (!parts.is_array() || parts.empty()) schema("parts must be a nonempty array");
  std::vector<PluckerVector> ps;
  for (const auto& p : parts) ps.push_back(plucker_from_json(p));
  try {
    return FlagSequence(std::move(ps));
  } catch (const PreconditionError& e) {
    schema(e.what());
  } catch (const TractMismatch& e) {
    schema(e.what());
  }
}

json to_json(const TractOrdering& o) {
  if (o.inherited()) return json{{"inherited", true}};
  Tract base = o.tract().is_extension() ? o.tract().base() : o.tract();
  return json{{"positives", to_json(base, o.positives())}};
}

TractOrdering ordering_from_json(const Tract& t, const json& j) {
  if (j.is_object() && j.contains("inherited")) {
    if (j.at("inherited") != true) schema("\"inherited\" must be true");
    try {
      return TractOrdering::standard(t);
    } catch (const PreconditionError& e) {
      schema(e.what());
    }
  }
  Tract base = t.is_extension() ? t.base() : t;
  return TractOrdering::from_positives(t, vector_from_json(base, field(j, "positives")));
}

json to_json(const SeriesMatrix& a) {
  json rows = json::array();
  for (const auto& row : a) {
    json r = json::array();
    for (const auto& s : row) r.push_back(to_json(s));
    rows.push_back(r);
  }
  return rows;
}

SeriesMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) schema("matrix must be an array of rows");
  SeriesMatrix a;
  for (const auto& row : j) {
    if (!row.is_array()) schema("matrix row must be an array");
    std::vector<HahnSeries> r;
    for (const auto& s : row) r.push_back(series_from_json(s));
    a.push_back(std::move(r));
  }
  return a;
}

SampleGrid grid_from_json(const Tract& ext, int n, const json& j) {
  if (!ext.is_extension()) schema("grids sample tropical extensions");
  SampleGrid g;
  auto values = [&](const json& arr) {
    if (!arr.is_array()) schema("grid values must be an array");
    std::vector<GammaExt> out;
    for (const auto& x : arr) out.push_back(gamma_from_json(x, ext.gamma_kind()));
    return out;
  };
  if (j.contains("per_coordinate")) {
    const json& pc = j.at("per_coordinate");
    if (!pc.is_array() || static_cast<int>(pc.size()) != n) schema("per_coordinate needs n lists");
    for (const auto& arr : pc) g.gammas.push_back(values(arr));
  } else {
    g.gammas.assign(static_cast<std::size_t>(n), values(field(j, "gammas")));
  }
  if (j.contains("units")) {
    g.base_units = vector_from_json(ext.base(), j.at("units"));
  } else if (ext.has_finite_base()) {
    g.base_units = finite_units(ext.base());
  } else {
    schema("grid over an infinite base needs explicit \"units\"");
  }
  return g;
}

json to_json(const PluckerReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back(json{{"I", f.I.one_based()}, {"J", f.J.one_based()}});
  return json{{"nonzero", r.nonzero}, {"ok", r.ok}, {"failing_relations", fails}};
}

json to_json(const Tract& t, const PointVerdict& v) {
  json d = v.charD ? json(*v.charD) : json(nullptr);
  return json{{"point", to_json(t, v.point)}, {"toric", v.toric}, {"charA", v.charA},
              {"charB", v.charB},           {"charC", v.charC},  {"charD", d}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace tracta::io
