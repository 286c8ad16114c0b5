#pragma once

#include <vector>

#include "gem/colored_graph.hpp"

// Slow, obviously-correct reference implementations used as test oracles.
namespace gem::testkit {

// Breadth-first search from every unvisited vertex.
int flood_fill_components(const ColoredGraph& g, ColorSet colors);

// Tries every vertex bijection (and every color bijection if allowed). V <= 10.
bool brute_force_isomorphic(const ColoredGraph& g, const ColoredGraph& h, bool allow_color_perm);

// For connected graphs: an isomorphism is fixed by the image of vertex 0, so try
// each image and propagate along edges.
bool rooted_walk_isomorphic(const ColoredGraph& g, const ColoredGraph& h, bool allow_color_perm);

// Cube-path simplices of the n-torus with colors 1..n glued by matching point
// lists; color 0 by the literal color walk. Vertices in lexicographic order.
ColoredGraph geometric_torus(int n);

}  // namespace gem::testkit
