#include "tracta/subset.hpp"

#include <algorithm>

#include "tracta/errors.hpp"

namespace tracta {

Subset Subset::of(std::initializer_list<int> zero_based) {
  Subset s;
  for (int i : zero_based) s = s.with(i);
  return s;
}

Subset Subset::from_one_based(const std::vector<int>& elems) {
  Subset s;
  for (int i : elems) {
    if (i < 1 || i > kMaxGround) throw SchemaError("element index out of range: " + std::to_string(i));
    if (s.contains(i - 1)) throw SchemaError("repeated element " + std::to_string(i));
    s = s.with(i - 1);
  }
  return s;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (std::uint32_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::vector<int> Subset::one_based() const {
  auto e = elements();
  for (auto& x : e) ++x;
  return e;
}

Subset complement(Subset s, int n) { return Subset::full(n) - s; }

std::vector<Subset> subsets_of_size(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Subset s;
    for (int i : idx) s = s.with(i);
    out.push_back(s);
    int p = k - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - k + p) --p;
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < k; ++q) {
      idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return out;
}

bool lex_less(Subset a, Subset b) {
  auto x = a.elements();
  auto y = b.elements();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::size_t colex_rank(Subset s) {
  static const auto table = [] {
    std::vector<std::vector<std::size_t>> c(kMaxGround + 1, std::vector<std::size_t>(kMaxGround + 2));
    for (int n = 0; n <= kMaxGround; ++n) {
      for (int k = 0; k <= kMaxGround + 1; ++k) c[n][k] = binomial(n, k);
    }
    return c;
  }();
  std::size_t r = 0;
  int t = 1;
  for (std::uint32_t b = s.bits; b; b &= b - 1, ++t) r += table[std::countr_zero(b)][t];
  return r;
}

std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.one_based()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(e);
  }
  return out + "}";
}

int crossing_inversions(Subset a, Subset b) {
  int inv = 0;
  for (int x : a.elements()) inv += std::popcount(b.bits & ((1u << x) - 1u));
  return inv;
}

}  // namespace tracta
