#include "demo/render.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "tracta/errors.hpp"
#include "tracta/linear_space.hpp"

namespace tracta::demo {

namespace {

using Point = std::vector<long>;  // coordinates in units of 1/steps

PluckerVector over_rational_gamma(const PluckerVector& p) {
  PluckerVector q(Tract::extension(Tract::krasner(), GammaKind::rational()), p.n(), p.rank());
  for (Subset s : subsets_of_size(p.n(), p.rank())) {
    const Element& e = p[s];
    if (!e.is_zero()) q.set(s, ext_elem(krasner_one(), e.gamma()));
  }
  return q;
}

TractVector to_vector(const Point& x, int steps) {
  TractVector v;
  for (long c : x) v.push_back(ext_elem(krasner_one(), GammaValue(Rational(c, steps))));
  v.push_back(ext_elem(krasner_one(), GammaValue(Rational(0))));
  return v;
}

}  // namespace

std::string render_svg(const PluckerVector& p, const RenderOptions& opts) {
  const Tract& t = p.tract();
  if (!t.is_extension() || t.base_kind() != TractKind::Krasner) {
    throw PreconditionError("render needs a valuated matroid over K[Γ], got " + t.name());
  }
  if (p.rank() != 2 || (p.n() != 3 && p.n() != 4)) {
    throw PreconditionError("render supports rank 2 on 3 or 4 elements");
  }
  if (t.gamma_kind().width != 1) throw PreconditionError("render needs a one-dimensional Γ");
  const PluckerVector q = over_rational_gamma(p);
  LinearSpace ls(q);
  const int dim = p.n() - 1;
  const long lim = opts.radius * opts.steps;

  std::map<Point, bool> member;
  auto is_member = [&](const Point& x) {
    auto it = member.find(x);
    if (it != member.end()) return it->second;
    return member[x] = ls.charB(to_vector(x, opts.steps));
  };

  std::vector<Point> points;
  Point x(static_cast<std::size_t>(dim), -lim);
  check_guard(static_cast<std::uint64_t>(std::pow(2 * lim + 1, dim)), "render grid");
  for (;;) {
    if (is_member(x)) points.push_back(x);
    int i = dim - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == lim) x[static_cast<std::size_t>(i--)] = -lim;
    if (i < 0) break;
    ++x[static_cast<std::size_t>(i)];
  }

  // Oblique projection for the third axis.
  auto project = [&](const Point& y) {
    double px = static_cast<double>(y[0]) / opts.steps;
    double py = static_cast<double>(y[1]) / opts.steps;
    if (dim == 3) {
      const double z = static_cast<double>(y[2]) / opts.steps;
      px -= 0.5 * z;
      py -= 0.35 * z;
    }
    const double span = 2.0 * opts.radius * (dim == 3 ? 1.6 : 1.0);
    const double scale = (opts.size - 40) / span;
    const double cx = opts.size / 2.0 + px * scale;
    const double cy = opts.size / 2.0 - py * scale;
    return std::pair{cx, cy};
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size << "\" height=\"" << opts.size
      << "\" viewBox=\"0 0 " << opts.size << " " << opts.size << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<g stroke=\"black\" stroke-width=\"2\">\n";
  std::vector<Point> directions;
  for (int code = 1; code < static_cast<int>(std::pow(3, dim)); ++code) {
    Point d;
    int c = code;
    for (int i = 0; i < dim; ++i) {
      d.push_back(c % 3 - 1);
      c /= 3;
    }
    // One of each ± pair: the last nonzero coordinate is positive.
    long last = 0;
    for (long v : d) {
      if (v != 0) last = v;
    }
    if (last > 0) directions.push_back(d);
  }
  for (const Point& a : points) {
    for (const Point& d : directions) {
      Point b = a;
      bool inside = true;
      for (std::size_t i = 0; i < a.size(); ++i) {
        b[i] += d[i];
        if (std::abs(b[i]) > lim) inside = false;
      }
      if (!inside || !member.contains(b) || !member[b]) continue;
      Point mid;  // at double resolution
      for (std::size_t i = 0; i < a.size(); ++i) mid.push_back(a[i] + b[i]);
      if (!ls.charB(to_vector(mid, 2 * opts.steps))) continue;
      auto [x1, y1] = project(a);
      auto [x2, y2] = project(b);
      svg << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"/>\n";
    }
  }
  svg << "</g>\n<g fill=\"crimson\">\n";
  for (const Point& a : points) {
    auto [cx, cy] = project(a);
    svg << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"2.5\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace tracta::demo
