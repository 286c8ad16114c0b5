#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gem/iso_canon.hpp"
#include "gem/labeled_gem.hpp"

namespace gem {

// Element of Z2^4; bit k is coordinate c_{k+1}.
using Z2Vector = std::uint8_t;
// "0" for the zero vector, otherwise the indices of the set coordinates ("134").
std::string z2_word(Z2Vector w);
// Inverse of z2_word; throws ParseError on anything else.
Z2Vector parse_z2_word(const std::string& s);

// The polytope P = triangle x triangle. Points are grid pairs (i,j), 0 <= i,j <= 2;
// the point (i,j) is the vertex v_{i+j}^j. Facets:
//   F1: j in {0,1}   F2: j in {0,2}   F3: i in {0,1}
//   F4: i in {0,2}   F5: j in {1,2}   F6: i in {1,2}
struct GridPoint {
  int i = 0, j = 0;
  friend bool operator==(GridPoint, GridPoint) = default;
};
bool facet_contains(int facet, GridPoint p);
std::vector<int> facets_at(GridPoint p);  // ascending

// Simplices t1..t6 of one copy: monotone grid paths from (0,0) to (2,2). The
// color-c vertex of t^k is the point with i+j = c.
const std::array<std::array<GridPoint, 5>, 6>& simplex_paths();

// Across the face of t^k opposite its color-c vertex lies either another simplex
// of the same copy (internal) or a facet of P (boundary).
struct SimplexFace {
  bool internal = false;
  int index = 0;  // simplex 1..6 if internal, facet 1..6 otherwise
  friend bool operator==(SimplexFace, SimplexFace) = default;
};
// Derived from the geometry and checked against the shipped table (AuditFailed).
const std::array<std::array<SimplexFace, 5>, 6>& simplex_faces();

struct CharacteristicFunction {
  std::array<Z2Vector, 6> lambda{};  // lambda[F-1]
  friend bool operator==(const CharacteristicFunction&, const CharacteristicFunction&) = default;
};
// Basis condition at all nine vertices of P.
bool is_valid(const CharacteristicFunction& l);
std::string describe(const CharacteristicFunction& l);

// lambda_1..lambda_7 in the standard order (lambda(F_i) = e_i for i <= 4).
const std::vector<CharacteristicFunction>& standard_characteristic_functions();
// Brute force over lambda(F5), lambda(F6) with lambda(F_i) = e_i for i <= 4;
// valid functions in standard order, unlisted ones (if any) appended.
std::vector<CharacteristicFunction> enumerate_characteristic_functions();

// Some automorphism theta of Z2^4 with l2 = theta o l1.
bool dj_equivalent(const CharacteristicFunction& l1, const CharacteristicFunction& l2);

// 96 vertices T_{w}^{j}, w over Z2^4 in lexicographic (c1..c4) order, j = 1..6.
// Throws InvalidCharacteristicFunction.
LabeledGem small_cover_gem(const CharacteristicFunction& l);
LabeledGem small_cover_gem(int index);  // 1..7

// 4x4 table of subscripts: rows are the {0,1}-cycles of S, columns its {3,4}-cycles,
// where S is spanned by the T_w^j with j in 2..5.
struct CompactForm {
  int index = 0;
  std::array<std::array<Z2Vector, 4>, 4> cells{};
};
// Shipped table for cover `index`; throws MissingData / ParseError.
CompactForm compact_form_table(int index);
// The subgraph S on colors {0,1,3,4}, recolored 0,1,2,3.
LabeledGem compact_subgraph(const LabeledGem& g);
// Recomputes the cycles of S in g and checks them against the shipped table.
CompactForm compact_form(const LabeledGem& g, int index);

struct SmallCoverReduction {
  LabeledGem gem;
  std::vector<int> trace;  // 96, 88, 80, 64, 52
};
// Four glue moves: the {0,4}-cycles through T_0^1 and T_0^6 onto their color-2
// neighbours, then the fourth row (vertices T^2, T^4) on color 3, then the third
// column (surviving T^2, T^3) on color 1. Row and column are also recomputed as
// the only applicable moves of their kind; a disagreement is AuditFailed.
SmallCoverReduction reduce_to_crystallization(const LabeledGem& g, const CompactForm& cf);
SmallCoverReduction small_cover_crystallization(int index);

// Classes of the seven reduced crystallizations by canonical signature, as lists
// of indices 1..7.
std::vector<std::vector<int>> classify_covers(CanonMode mode = CanonMode::FixedColors);

}  // namespace gem
