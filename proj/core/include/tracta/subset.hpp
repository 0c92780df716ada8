#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace tracta {

inline constexpr int kMaxGround = 16;

/// Subset of a ground set {0, ..., n-1}, stored as a bitmask. I/O is 1-based.
struct Subset {
  std::uint32_t bits = 0;

  static Subset of(std::initializer_list<int> zero_based);
  static Subset from_one_based(const std::vector<int>& elems);
  static Subset full(int n) { return {n == 0 ? 0u : ((1u << n) - 1u)}; }

  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(int i) const { return (bits >> i) & 1u; }
  Subset with(int i) const { return {bits | (1u << i)}; }
  Subset without(int i) const { return {bits & ~(1u << i)}; }
  bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
  /// Ascending zero-based elements.
  std::vector<int> elements() const;
  std::vector<int> one_based() const;

  friend Subset operator|(Subset a, Subset b) { return {a.bits | b.bits}; }
  friend Subset operator&(Subset a, Subset b) { return {a.bits & b.bits}; }
  friend Subset operator-(Subset a, Subset b) { return {a.bits & ~b.bits}; }
  friend bool operator==(Subset, Subset) = default;
};

Subset complement(Subset s, int n);

/// k-subsets of {0..n-1} in lexicographic order of their sorted elements.
std::vector<Subset> subsets_of_size(int n, int k);

/// Lexicographic comparison of sorted element lists.
bool lex_less(Subset a, Subset b);

/// Colexicographic rank among subsets of equal size.
std::size_t colex_rank(Subset s);

std::uint64_t binomial(int n, int k);

/// "{1,3}" in 1-based notation.
std::string to_string(Subset s);

/// Number of pairs (a in A, b in B) with a > b; the parity of sorting A‖B.
int crossing_inversions(Subset a, Subset b);

}  // namespace tracta
