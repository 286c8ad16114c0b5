#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

enum class CanonMode { FixedColors, UpToColorPermutation };

struct CanonicalSignature {
  CanonMode mode = CanonMode::FixedColors;
  std::string bytes;

  std::string digest() const;  // 16 hex digits, for display only
  friend bool operator==(const CanonicalSignature&, const CanonicalSignature&) = default;
};

// Canonical labeling in fixed-color mode: order[k] is the vertex placed at
// position k. Isomorphic graphs give equal codes.
struct CanonicalForm {
  std::vector<int> code;
  std::vector<Vertex> order;
};
CanonicalForm canonical_form(const ColoredGraph& g);

// Up-to-color mode minimizes over all (n+1)! color maps; color_map is the
// minimizing map (color c of g becomes color_map[c]).
struct CanonicalColoredForm {
  CanonicalForm form;
  std::vector<Color> color_map;
};
CanonicalColoredForm canonical_colored_form(const ColoredGraph& g);

CanonicalSignature canonical_signature(const ColoredGraph& g, CanonMode mode = CanonMode::FixedColors);

// h.neighbor(color_map[c], vertex_map[v]) == vertex_map[g.neighbor(c, v)].
struct IsoWitness {
  std::vector<Vertex> vertex_map;
  std::vector<Color> color_map;
};
bool verify_witness(const ColoredGraph& g, const ColoredGraph& h, const IsoWitness& w);

// Throws ColorCountMismatch when the color counts differ.
std::optional<IsoWitness> isomorphic(const ColoredGraph& g, const ColoredGraph& h, bool allow_color_perm = false);

}  // namespace gem
