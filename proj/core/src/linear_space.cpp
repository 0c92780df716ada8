#include "tracta/linear_space.hpp"

#include <algorithm>

#include "tracta/errors.hpp"

namespace tracta {

SampleGrid uniform_grid(int n, std::vector<GammaExt> gammas, std::vector<Element> base_units) {
  SampleGrid g;
  g.gammas.assign(static_cast<std::size_t>(n), std::move(gammas));
  g.base_units = std::move(base_units);
  return g;
}

namespace {

std::vector<Element> coordinate_options(const Tract& ext, const SampleGrid& grid, std::size_t i) {
  std::vector<Element> opts;
  for (const auto& g : grid.gammas[i]) {
    if (g.is_infinite()) {
      opts.emplace_back();
      continue;
    }
    for (const auto& b : grid.base_units) {
      Element e = ext_elem(b, g.value());
      validate(ext, e);
      opts.push_back(std::move(e));
    }
  }
  return opts;
}

}  // namespace

std::uint64_t grid_size(const SampleGrid& grid) {
  std::uint64_t total = 1;
  for (const auto& gs : grid.gammas) {
    std::uint64_t k = 0;
    for (const auto& g : gs) k += g.is_infinite() ? 1 : grid.base_units.size();
    total *= k;
    if (total > (std::uint64_t{1} << 40)) break;
  }
  return total;
}

std::vector<TractVector> grid_points(const Tract& ext, const SampleGrid& grid) {
  if (!ext.is_extension()) throw PreconditionError("grids sample tropical extensions");
  if (grid.gammas.empty()) throw PreconditionError("empty sample grid");
  check_guard(grid_size(grid), "sample grid");
  std::vector<std::vector<Element>> opts;
  for (std::size_t i = 0; i < grid.gammas.size(); ++i) {
    opts.push_back(coordinate_options(ext, grid, i));
    if (opts.back().empty()) return {};
  }
  std::vector<TractVector> out;
  std::vector<std::size_t> pick(opts.size(), 0);
  while (true) {
    TractVector x;
    for (std::size_t i = 0; i < opts.size(); ++i) x.push_back(opts[i][pick[i]]);
    out.push_back(std::move(x));
    std::size_t i = opts.size();
    while (i-- > 0) {
      if (++pick[i] < opts[i].size()) break;
      pick[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

LinearSpace::LinearSpace(PluckerVector p) : p_(std::move(p)), circuits_(circuits(p_)) {
  if (!p_.tract().is_extension()) throw PreconditionError("linear spaces need a tropical extension");
}

bool LinearSpace::charA(std::span<const Element> x) {
  Subset a = support(x);
  a = complement(a, p_.n());
  auto it = contractions_.find(a.bits);
  if (it == contractions_.end()) it = contractions_.emplace(a.bits, contraction(circuits_, a)).first;
  return is_covector(it->second, restrict_vector(x, a));
}

bool LinearSpace::charB(std::span<const Element> x) const { return is_covector(circuits_, x); }

namespace {

DirectionU modulus_of(std::span<const Element> x) {
  DirectionU u;
  for (const auto& e : x) u.push_back(modulus(e));
  return u;
}

TractVector theta_of(std::span<const Element> x) {
  TractVector v;
  for (const auto& e : x) v.push_back(theta(e));
  return v;
}

}  // namespace

bool LinearSpace::charC(std::span<const Element> x) const {
  InitialMatroid m = initial(p_, modulus_of(x));
  return is_covector(m.circuits, theta_of(x));
}

bool LinearSpace::charD(std::span<const Element> x, std::span<const Element> scalar_domain) {
  if (fundamental_.empty()) {
    for (Subset b : underlying_bases(p_)) {
      std::vector<TractVector> gens;
      for (int j : b.elements()) gens.push_back(fundamental_cocircuit(p_, b, j));
      fundamental_.emplace_back(b, std::move(gens));
    }
  }
  for (const auto& [b, gens] : fundamental_) {
    if (!span_contains(p_.tract(), gens, x, scalar_domain)) return false;
  }
  return true;
}

PointVerdict LinearSpace::evaluate(const TractVector& x, const std::vector<Element>* scalar_domain) {
  PointVerdict v;
  v.point = x;
  v.toric = std::none_of(x.begin(), x.end(), [](const Element& e) { return e.is_zero(); });
  v.charA = charA(x);
  v.charB = charB(x);
  v.charC = charC(x);
  if (scalar_domain != nullptr) v.charD = charD(x, *scalar_domain);
  return v;
}

bool member_charA(const PluckerVector& p, std::span<const Element> x) {
  return LinearSpace(p).charA(x);
}
bool member_charB(const PluckerVector& p, std::span<const Element> x) {
  return LinearSpace(p).charB(x);
}
bool member_charC(const PluckerVector& p, std::span<const Element> x) {
  return LinearSpace(p).charC(x);
}
bool member_charD(const PluckerVector& p, std::span<const Element> x,
                  std::span<const Element> scalar_domain) {
  return LinearSpace(p).charD(x, scalar_domain);
}

std::optional<std::vector<Element>> default_scalar_domain(const Tract& ext, const SampleGrid& grid) {
  if (!ext.has_finite_base()) return std::nullopt;
  std::vector<GammaExt> values;
  for (const auto& gs : grid.gammas) {
    for (const auto& g : gs) {
      if (g.is_finite() && std::find(values.begin(), values.end(), g) == values.end()) values.push_back(g);
    }
  }
  std::vector<Element> dom{Element()};
  for (const auto& b : finite_units(ext.base())) {
    for (const auto& g : values) dom.push_back(ext_elem(b, g.value()));
  }
  return dom;
}

bool initial_loopless(const PluckerVector& p, std::span<const Element> x) {
  if (p.tract().base_kind() != TractKind::Krasner) throw PreconditionError("loopless test needs a K base");
  InitialMatroid m = initial(p, modulus_of(x));
  for (const auto& c : m.circuits.vectors) {
    if (support(c).size() == 1) return false;
  }
  return true;
}

bool nonconformal_test(const PluckerVector& p, std::span<const Element> x) {
  if (p.tract().base_kind() != TractKind::Sign) throw PreconditionError("conformality test needs an S base");
  DirectionU u = modulus_of(x);
  for (const auto& c : circuits(p).vectors) {
    TractVector ci = initial_circuit(c, u);
    if (support(ci).empty()) continue;
    bool opposite = false, same = false;
    for (std::size_t i = 0; i < ci.size(); ++i) {
      if (ci[i].is_zero() || x[i].is_zero()) continue;
      int s = std::get<SignUnit>(ci[i].base()).s * std::get<SignUnit>(x[i].base()).s;
      (s < 0 ? opposite : same) = true;
    }
    // Non-conformal with C needs an opposite product, with -C a matching one.
    if (!opposite || !same) return false;
  }
  return true;
}

bool tspan_member_K(const CircuitSet& cocircuits, std::span<const Element> x) {
  if (cocircuits.tract.base_kind() != TractKind::Krasner || !cocircuits.tract.is_extension()) {
    throw PreconditionError("tropical span membership needs a K[Γ] base");
  }
  std::size_t n = x.size();
  std::vector<GammaExt> best(n, GammaExt::infinity());
  for (const auto& d : cocircuits.vectors) {
    // Smallest shift α with α + D ≥ X coordinatewise.
    GammaExt alpha;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i].is_zero()) continue;
      GammaExt need = x[i].is_zero() ? GammaExt::infinity()
                                     : GammaExt(x[i].gamma() - d[i].gamma());
      if (first || need > alpha) alpha = need;
      first = false;
    }
    if (first || alpha.is_infinite()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i].is_zero()) best[i] = gamma_min(best[i], alpha + GammaExt(d[i].gamma()));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(best[i] == modulus(x[i]))) return false;
  }
  return true;
}

std::vector<PointVerdict> enumerate_linear_space(const PluckerVector& p, const SampleGrid& grid) {
  LinearSpace ls(p);
  auto dom = default_scalar_domain(p.tract(), grid);
  std::vector<PointVerdict> out;
  for (const auto& x : grid_points(p.tract(), grid)) {
    out.push_back(ls.evaluate(x, dom ? &*dom : nullptr));
  }
  return out;
}

}  // namespace tracta
