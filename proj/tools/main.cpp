#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "demo/criteria.hpp"
#include "demo/render.hpp"
#include "tracta/errors.hpp"
#include "tracta/json_io.hpp"

namespace {

using tracta::io::json;
namespace io = tracta::io;

struct Options {
  std::string input = "-";
  std::string output;
  std::string tract;
  std::string u;
  std::string grid;
  std::string kind = "val";
  std::string format = "json";
  bool weak = false;
  bool strong = false;
  int trials = 200;
  std::uint64_t seed = 1;
  std::string demo_name;
  bool demo_all = false;
  bool demo_list = false;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw tracta::SchemaError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Loads --input, filling in or checking "tract" against --tract.
json load_input(const Options& o) {
  json j = io::parse(read_text(o.input));
  if (!o.tract.empty()) {
    json t = io::parse(o.tract);
    if (!j.is_object()) throw tracta::SchemaError("--tract needs an object payload");
    if (!j.contains("tract")) {
      j["tract"] = t;
    } else if (io::tract_from_json(j["tract"]) != io::tract_from_json(t)) {
      throw tracta::TractMismatch("payload tract differs from --tract");
    }
  }
  return j;
}

tracta::DirectionU load_u(const Options& o, const tracta::Tract& t) {
  if (o.u.empty()) throw tracta::SchemaError("--u is required");
  return io::direction_from_json(io::parse(o.u), t.gamma_kind());
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw tracta::SchemaError("cannot write " + o.output);
  out << text;
}

void emit(const Options& o, const json& j) { emit(o, j.dump(2)); }

json relation_json(const tracta::RelationFailure& f) {
  return json{{"I", f.I.one_based()}, {"J", f.J.one_based()}};
}

int cmd_check(const Options& o) {
  auto p = io::plucker_from_json(load_input(o));
  const bool weak = o.weak && !o.strong;
  json out = io::to_json(tracta::check_plucker(p, weak ? tracta::Strength::Weak : tracta::Strength::Strong, true));
  out["strength"] = weak ? "weak" : "strong";
  emit(o, out);
  return 0;
}

int cmd_circuits(const Options& o) {
  emit(o, io::to_json(tracta::circuits(io::plucker_from_json(load_input(o)))));
  return 0;
}

int cmd_dual(const Options& o) {
  emit(o, io::to_json(tracta::dual(io::plucker_from_json(load_input(o)))));
  return 0;
}

int cmd_initial(const Options& o) {
  auto p = io::plucker_from_json(load_input(o));
  auto u = load_u(o, p.tract());
  auto im = tracta::initial(p, u);
  auto via_circuits = tracta::initial_circuits_of(p, u);
  json out{{"u", io::to_json(u, p.tract().gamma_kind())},
           {"plucker", io::to_json(im.plucker)},
           {"circuits", io::to_json(via_circuits)},
           {"strong", tracta::is_strong_matroid(im.plucker)}};
  emit(o, out);
  return 0;
}

int cmd_flag(const Options& o) {
  auto f = io::flag_from_json(load_input(o));
  auto rep = tracta::check_flag(f);
  json out{{"flag", rep.ok}};
  if (!rep.ok) {
    out["failure"] = {{"lower", rep.lower + 1}, {"upper", rep.upper + 1}, {"relation", relation_json(rep.relation)}};
  }
  if (!o.u.empty()) {
    auto u = load_u(o, f.tract());
    out["u"] = io::to_json(u, f.tract().gamma_kind());
    out["initial"] = io::to_json(tracta::initial_flag(f, u));
  }
  emit(o, out);
  return 0;
}

int cmd_positroid(const Options& o) {
  json j = load_input(o);
  if (j.contains("parts")) {
    auto f = io::flag_from_json(j);
    auto ord = j.contains("ordering") ? io::ordering_from_json(f.tract(), j["ordering"])
                                      : tracta::TractOrdering::standard(f.tract());
    emit(o, json{{"flag", tracta::is_flag(f)}, {"flag_positroid", tracta::is_flag_positroid(f, ord)}});
    return 0;
  }
  auto p = io::plucker_from_json(j);
  auto ord = j.contains("ordering") ? io::ordering_from_json(p.tract(), j["ordering"])
                                    : tracta::TractOrdering::standard(p.tract());
  auto check = tracta::verify_ordering(ord);
  if (!check.ok) throw tracta::SchemaError("ordering fails " + check.failed + ": " + check.witness);
  json out{{"nonnegative", tracta::is_nonnegative(p, ord)},
           {"positroid", tracta::is_positroid(p, ord, tracta::Strength::Strong)}};
  if (!o.u.empty()) {
    auto u = load_u(o, p.tract());
    auto im = tracta::initial(p, u).plucker;
    auto base_ord = tracta::TractOrdering::standard(im.tract());
    out["initial_positroid"] = tracta::is_positroid(im, base_ord, tracta::Strength::Weak);
  }
  emit(o, out);
  return 0;
}

int cmd_linspace(const Options& o) {
  auto p = io::plucker_from_json(load_input(o));
  if (o.grid.empty()) throw tracta::SchemaError("--grid is required");
  auto grid = io::grid_from_json(p.tract(), p.n(), io::parse(o.grid));
  auto verdicts = tracta::enumerate_linear_space(p, grid);
  json members = json::array(), disagreements = json::array();
  for (const auto& v : verdicts) {
    if (v.charB) members.push_back(io::to_json(p.tract(), v.point));
    if (!v.agree()) disagreements.push_back(io::to_json(p.tract(), v));
  }
  emit(o, json{{"points", verdicts.size()},
               {"members", members},
               {"agree", disagreements.empty()},
               {"disagreements", disagreements}});
  return disagreements.empty() ? 0 : 2;
}

int cmd_tropicalize(const Options& o) {
  json j = load_input(o);
  auto kind = tracta::parse_valuation_kind(o.kind);
  tracta::GammaKind gamma = tracta::GammaKind::rational();
  if (j.is_object() && j.contains("gamma")) gamma = io::gamma_kind_from_json(j["gamma"]);
  json out;
  if (j.is_array() || j.contains("matrix")) {
    auto a = io::matrix_from_json(j.is_array() ? j : j["matrix"]);
    auto p = tracta::plucker_from_matrix(a);
    auto t = tracta::tropicalize_matroid(p, kind, gamma);
    out["plucker"] = io::to_json(t);
    out["circuits"] = io::to_json(tracta::circuits(t));
    if (!o.grid.empty()) {
      auto grid = io::grid_from_json(t.tract(), t.n(), io::parse(o.grid));
      auto rep = tracta::sample_and_check_tropicalisation(a, kind, o.trials, grid, o.seed, gamma);
      json escaped = json::array(), unresolved = json::array();
      for (const auto& v : rep.escaped) escaped.push_back(io::to_json(t.tract(), v));
      for (const auto& v : rep.unresolved) unresolved.push_back(io::to_json(t.tract(), v));
      out["check"] = {{"trials", rep.trials},         {"contained", rep.contained},
                      {"escaped", escaped},           {"grid_members", rep.grid_members},
                      {"matched", rep.matched},       {"unresolved", unresolved},
                      {"ok", rep.ok()}};
      emit(o, out);
      return rep.ok() ? 0 : 2;
    }
  } else {
    auto t = tracta::tropicalize_matroid(io::plucker_from_json(j), kind, gamma);
    out["plucker"] = io::to_json(t);
    out["circuits"] = io::to_json(tracta::circuits(t));
  }
  emit(o, out);
  return 0;
}

json result_json(const tracta::demo::CriterionResult& r) {
  return json{{"demo", r.name}, {"criterion", r.id}, {"pass", r.pass}, {"detail", r.detail}};
}

int cmd_demo(const Options& o) {
  using namespace tracta::demo;
  if (o.demo_list) {
    json names = json::array();
    for (int i = 1; i <= kCriterionCount; ++i) names.push_back(criterion_name(i));
    emit(o, names);
    return 0;
  }
  if (o.demo_all) {
    json all = json::array();
    bool ok = true;
    for (const auto& r : run_all()) {
      all.push_back(result_json(r));
      ok = ok && r.pass;
    }
    emit(o, all);
    return ok ? 0 : 2;
  }
  auto id = criterion_id(o.demo_name);
  if (!id) throw tracta::SchemaError("unknown demo '" + o.demo_name + "'; see demo --list");
  auto r = run_criterion(*id);
  emit(o, result_json(r));
  return r.pass ? 0 : 2;
}

int cmd_render(const Options& o) {
  auto p = io::plucker_from_json(load_input(o));
  std::string svg = tracta::demo::render_svg(p);
  if (o.format == "json") {
    emit(o, json{{"svg", svg}});
  } else {
    emit(o, svg);
  }
  return 0;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--input,-i", o.input, "Input JSON file, '-' for stdin");
  sub->add_option("--output,-o", o.output, "Write output to FILE instead of stdout");
  sub->add_option("--tract", o.tract, "Tract JSON, used when the payload has none");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "svg"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroids over tropical extensions of tracts"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Check the Grassmann-Plücker relations");
  add_common(check, o);
  check->add_flag("--strong", o.strong, "All relations (default)");
  check->add_flag("--weak", o.weak, "Three-term relations only");

  auto* circ = app.add_subcommand("circuits", "Circuits of a Plücker vector");
  add_common(circ, o);
  auto* dual = app.add_subcommand("dual", "Dual Plücker vector");
  add_common(dual, o);

  auto* init = app.add_subcommand("initial", "Initial matroid in direction u");
  add_common(init, o);
  init->add_option("--u", o.u, "Direction JSON")->required();

  auto* flag = app.add_subcommand("flag", "Check a flag, optionally with its initial flag");
  add_common(flag, o);
  flag->add_option("--u", o.u, "Direction JSON");

  auto* pos = app.add_subcommand("positroid", "Positivity of a Plücker vector or flag");
  add_common(pos, o);
  pos->add_option("--u", o.u, "Direction JSON for an initial positroid check");

  auto* lin = app.add_subcommand("linspace", "Linear space membership on a sample grid");
  add_common(lin, o);
  lin->add_option("--grid", o.grid, "Grid JSON")->required();

  auto* trop = app.add_subcommand("tropicalize", "Push a Hahn matrix or Plücker vector forward");
  add_common(trop, o);
  trop->add_option("--kind", o.kind, "Valuation")->check(CLI::IsMember({"val", "sval", "fval"}));
  trop->add_option("--grid", o.grid, "Grid JSON; enables the tropicalisation check");
  trop->add_option("--trials", o.trials, "Random row-space samples")->check(CLI::PositiveNumber);
  trop->add_option("--seed", o.seed, "Sampling seed");

  auto* demo = app.add_subcommand("demo", "Run a named fixture against its expected values");
  add_common(demo, o);
  demo->add_option("name", o.demo_name, "Demo name");
  demo->add_flag("--all", o.demo_all, "Run every demo");
  demo->add_flag("--list", o.demo_list, "List demo names");

  auto* render = app.add_subcommand("render", "SVG of a rank-2 valuated matroid on 3 or 4 elements");
  add_common(render, o);
  render->callback([&] {
    if (render->count("--format") == 0) o.format = "svg";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*check) return cmd_check(o);
    if (*circ) return cmd_circuits(o);
    if (*dual) return cmd_dual(o);
    if (*init) return cmd_initial(o);
    if (*flag) return cmd_flag(o);
    if (*pos) return cmd_positroid(o);
    if (*lin) return cmd_linspace(o);
    if (*trop) return cmd_tropicalize(o);
    if (*demo) {
      if (o.demo_name.empty() && !o.demo_all && !o.demo_list) {
        throw tracta::SchemaError("demo needs a name, --all or --list");
      }
      return cmd_demo(o);
    }
    if (*render) return cmd_render(o);
  } catch (const tracta::IntegrityError& e) {
    std::cerr << "integrity failure: " << e.what() << "\n";
    return 2;
  } catch (const tracta::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const tracta::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed payload: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
