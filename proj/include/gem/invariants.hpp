#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

// Exact value num/den with den in {1, 2}, reduced.
struct HalfInteger {
  long long twice = 0;  // 2 * value

  static HalfInteger from_twice(long long t) { return HalfInteger{t}; }
  bool is_integer() const { return twice % 2 == 0; }
  long long num() const { return is_integer() ? twice / 2 : twice; }
  long long den() const { return is_integer() ? 1 : 2; }
  double value() const { return static_cast<double>(twice) / 2.0; }
  std::string str() const;

  friend auto operator<=>(HalfInteger, HalfInteger) = default;
};

// A cyclic permutation of the colors, in canonical form: eps[0] = 0 and eps[1] < eps[n].
using CyclicPermutation = std::vector<Color>;

// Rotates 0 to the front and reflects when needed. Throws PermutationColorMismatch
// unless eps is a permutation of 0..n_colors-1.
CyclicPermutation canonical_cyclic(std::vector<Color> eps, int n_colors);
// All n!/2 canonical forms (1 when n+1 <= 2), in lexicographic order.
std::vector<CyclicPermutation> canonical_cyclic_permutations(int n_colors);

// g_{ij} for all pairs; symmetric, diagonal 0.
std::vector<std::vector<int>> pair_counts(const ColoredGraph& g);

struct GenusReport {
  CyclicPermutation eps;
  std::vector<int> pair_counts;  // g_{eps_i eps_{i+1}}, i = 0..n
  long long chi_eps = 0;
  HalfInteger rho;
};

// closed_manifold: caller asserts g is a gem of a closed manifold; rho must then
// be a non-negative integer (throws ResultInvalid otherwise).
GenusReport genus_for(const ColoredGraph& g, const std::vector<Color>& eps, bool closed_manifold = false);

struct RegularGenus {
  HalfInteger min_rho;
  std::vector<CyclicPermutation> argmin;  // lexicographic
  std::vector<GenusReport> reports;       // one per canonical permutation, lexicographic
};
RegularGenus regular_genus(const ColoredGraph& g);

long long euler_characteristic(const ColoredGraph& g);

long long genus_lower_bound(long long chi, long long rank);

struct WeakSemiSimpleReport {
  bool holds = false;
  std::vector<std::array<Color, 3>> triples;  // {eps_i, eps_{i+2}, eps_{i+4}}
  std::vector<int> counts;
};
// n = 4 only (DimensionUnsupported otherwise).
WeakSemiSimpleReport is_weak_semi_simple(const ColoredGraph& g, const std::vector<Color>& eps, long long rank);

// Sorted lengths of all {i,j}-colored cycles.
std::vector<int> bicolored_cycle_lengths(const ColoredGraph& g, Color i, Color j);

}  // namespace gem
