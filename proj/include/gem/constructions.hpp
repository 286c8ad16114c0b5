#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gem/labeled_gem.hpp"
#include "gem/moves.hpp"

namespace gem {

// Transcribed crystallizations; loaders audit the stated invariants and throw
// AuditFailed on mismatch.
LabeledGem s2xs1_standard();  // 8 vertices, S2 x S1
LabeledGem t3_standard();     // 24 vertices, 3-torus

// Block of the product construction: a copy of the base graph with one color
// dropped and the others recolored.
struct BlockMap {
  char name;                      // 'A'..'D'
  std::map<Color, Color> colors;  // base color -> product color
};
const std::array<BlockMap, 4>& product_blocks();

// Gem of M x S1 from a 4-colored crystallization of M: eight blocks
// D,C,B,A,D',C',B',A', each a recolored copy of the base, labeled "<base label>^{X}".
LabeledGem product_gem(const LabeledGem& base);

MoveScript g1_prime_script();
MoveScript g2_prime_script();

struct Reduction {
  LabeledGem gem;
  std::vector<int> trace;
};
Reduction g1_prime_reduction();  // product_gem(s2xs1) through g1_prime_script
Reduction g2_prime_reduction();  // product_gem(t3) through g2_prime_script
LabeledGem g1_prime();
LabeledGem g2_prime();

// Direct transcriptions of the drawings of the reduced graphs.
LabeledGem g1_prime_figure();  // 40 vertices
LabeledGem g2_prime_figure();  // 120 vertices

// Names accepted by build_named: s2xs1, t3, g1prime, g2prime, g1prime-figure, g2prime-figure.
std::vector<std::string> construction_names();
LabeledGem build_named(const std::string& name);

}  // namespace gem
