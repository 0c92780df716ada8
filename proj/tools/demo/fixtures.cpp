#include "demo/fixtures.hpp"

#include <string_view>

#include "tracta/errors.hpp"

namespace tracta::demo {

namespace {

HahnSeries c(long v) { return HahnSeries(v); }

bool full_rank(const SeriesMatrix& a) {
  const int r = static_cast<int>(a.size());
  const int n = static_cast<int>(a.front().size());
  for (Subset s : subsets_of_size(n, r)) {
    SeriesMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (int j : s.elements()) m[i].push_back(a[i][static_cast<std::size_t>(j)]);
    }
    if (!determinant(m).is_zero()) return true;
  }
  return false;
}

}  // namespace

SeriesMatrix pn_matrix() {
  return {{c(1), c(0), c(-2), c(2)}, {c(0), c(1), c(-1), c(1) - HahnSeries::t()}};
}

SeriesMatrix pn_first_row() { return {{c(1), c(0), c(-2), c(2)}}; }

PluckerVector pn_plucker() { return plucker_from_matrix(pn_matrix()); }

PluckerVector pn_valuated(ValuationKind kind, const GammaKind& gamma) {
  return tropicalize_matroid(pn_plucker(), kind, gamma);
}

FlagSequence pn_flag() {
  return FlagSequence({plucker_from_matrix(pn_first_row()), pn_plucker()});
}

PluckerVector triangle_matroid(long delta) {
  const Tract t = Tract::extension(Tract::triangle(), GammaKind::integer());
  PluckerVector p(t, 6, 3);
  const Subset lower = Subset::of({0, 1, 2, 3});
  const Subset tail = Subset::of({4, 5});
  for (Subset s : subsets_of_size(6, 3)) {
    const std::vector<int> e = s.elements();
    long theta = 1;
    if (s == Subset::of({0, 4, 5})) {
      theta = 4;
    } else if (e[0] == 0 && e[1] >= 1 && e[1] <= 3 && e[2] >= 4) {
      theta = 2;
    }
    const long gamma = (s.subset_of(lower) || tail.subset_of(s)) ? 0 : delta;
    p.set(s, ext_elem(rational_elem(Rational(theta)), GammaValue::from_int(gamma)));
  }
  return p;
}

PluckerVector signed_three() {
  const Tract t = Tract::extension(Tract::sign(), GammaKind::integer());
  PluckerVector p(t, 3, 2);
  const GammaValue zero = GammaValue::from_int(0);
  p.set(Subset::of({0, 1}), ext_elem(sign_elem(-1), zero));
  p.set(Subset::of({0, 2}), ext_elem(sign_elem(-1), zero));
  p.set(Subset::of({1, 2}), ext_elem(sign_elem(1), zero));
  return p;
}

SeriesMatrix positroid_matrix() {
  return {{c(1), c(1), HahnSeries::t(), c(0)}, {c(0), c(1), c(1), c(1)}};
}

SeriesMatrix flipped_positroid_matrix() {
  SeriesMatrix a = positroid_matrix();
  for (auto& row : a) row[0] = -row[0];
  return a;
}

DirectionU int_direction(const std::vector<long>& values) {
  DirectionU u;
  for (long v : values) u.emplace_back(GammaValue::from_int(v));
  return u;
}

DirectionU rational_direction(const std::vector<const char*>& values) {
  DirectionU u;
  for (const char* v : values) {
    if (std::string_view(v) == "inf") {
      u.push_back(GammaExt::infinity());
    } else {
      u.emplace_back(GammaValue(parse_rational(v)));
    }
  }
  return u;
}

std::vector<DirectionU> region_directions() {
  return {rational_direction({"1", "0", "0", "0"}),   rational_direction({"0", "1", "0", "0"}),
          rational_direction({"0", "0", "0", "0"}),   rational_direction({"0", "0", "1/2", "1/2"}),
          rational_direction({"0", "0", "2", "1"}),   rational_direction({"0", "0", "1", "1"}),
          rational_direction({"0", "0", "1", "2"})};
}

HahnSeries random_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 2);
  std::uniform_int_distribution<long> coeff(1, 3);
  std::uniform_int_distribution<long> expo(0, 2);
  std::bernoulli_distribution negative(0.5);
  HahnSeries out;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) {
    const long a = negative(rng) ? -coeff(rng) : coeff(rng);
    out += HahnSeries::monomial(a, expo(rng));
  }
  if (out.is_zero()) out = HahnSeries(1);
  return out;
}

SeriesMatrix random_full_rank(std::mt19937_64& rng, int rows, int cols) {
  std::bernoulli_distribution zero(0.2);
  for (;;) {
    SeriesMatrix a(static_cast<std::size_t>(rows));
    for (auto& row : a) {
      for (int j = 0; j < cols; ++j) row.push_back(zero(rng) ? HahnSeries() : random_series(rng));
    }
    if (full_rank(a)) return a;
  }
}

DirectionU random_int_direction(std::mt19937_64& rng, int n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  DirectionU u;
  for (int i = 0; i < n; ++i) u.emplace_back(GammaValue::from_int(d(rng)));
  return u;
}

}  // namespace tracta::demo
