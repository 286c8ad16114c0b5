#pragma once

#include <cstdint>
#include <vector>

#include "gem/invariants.hpp"
#include "gem/labeled_gem.hpp"

namespace gem {

// Crystallization of the n-torus from the path triangulation of the (n+1)-cube.
// Vertices are the permutations of 1..n+1 in lexicographic order, labeled by
// their one-line form ("2143"; comma separated once n+1 > 9). Color k in 1..n
// swaps positions k and k+1; color 0 swaps positions 1 and n+1.
LabeledGem torus_gem(int n, std::uint64_t budget = 40320);

// Color 0 as the walk along colors n, n-1, ..., 2, 1, 2, ..., n applied to one
// permutation (1-based values). Kept separate from torus_gem as a cross-check.
std::vector<int> torus_zero_walk(const std::vector<int>& perm);

// (0,2,...,n,1,3,...,n-1) for even n, (0,2,...,n-1,1,n,n-2,...,3) for odd n.
CyclicPermutation torus_stated_permutation(int n);

// 1 + (n+1)!(n-3)/8, for n >= 4.
std::int64_t torus_genus_formula(int n);

struct TorusCycleAudit {
  bool lengths_4_or_6 = false;   // every bi-colored cycle
  bool stated_pairs_4 = false;   // consecutive colors of the stated permutation give only 4-cycles
  bool ok() const { return lengths_4_or_6 && stated_pairs_4; }
};
TorusCycleAudit audit_cycle_lengths(const LabeledGem& g);

}  // namespace gem
