#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace gem {

using Vertex = int;
using Color = int;
using Pair = std::pair<Vertex, Vertex>;

inline constexpr int kMaxColors = 16;

// Subset of the color set {0..n}, stored as a bitmask.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}
  ColorSet(std::initializer_list<Color> colors);

  static ColorSet all(int n_colors) { return ColorSet((1u << n_colors) - 1u); }
  static ColorSet of(std::span<const Color> colors);

  bool contains(Color c) const { return c >= 0 && c < 32 && ((bits_ >> c) & 1u); }
  ColorSet with(Color c) const { return ColorSet(bits_ | (1u << c)); }
  ColorSet without(Color c) const { return ColorSet(bits_ & ~(1u << c)); }
  ColorSet complement(int n_colors) const { return ColorSet(~bits_ & all(n_colors).bits_); }
  int size() const { return __builtin_popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }
  std::vector<Color> colors() const;

  friend bool operator==(ColorSet, ColorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Component id per vertex; ids are dense and ordered by smallest member vertex.
struct ComponentLabeling {
  std::vector<int> id;
  int count = 0;
};

// (n+1)-regular properly edge-colored loopless multigraph: one fixed-point-free
// involution per color. Immutable once built.
class ColoredGraph {
 public:
  // pairs[c] must cover every vertex exactly once.
  static ColoredGraph from_pairs(int n_colors, int num_vertices,
                                 const std::vector<std::vector<Pair>>& pairs);
  static ColoredGraph from_involutions(std::vector<std::vector<Vertex>> involutions);

  int n_colors() const { return n_colors_; }
  int dimension() const { return n_colors_ - 1; }
  int num_vertices() const { return num_vertices_; }

  Vertex neighbor(Color c, Vertex v) const { return adj_[static_cast<std::size_t>(c) * num_vertices_ + v]; }
  std::span<const Vertex> involution(Color c) const {
    return {adj_.data() + static_cast<std::size_t>(c) * num_vertices_, static_cast<std::size_t>(num_vertices_)};
  }
  // Colors of all edges joining u and v.
  ColorSet joining(Vertex u, Vertex v) const;
  // Edges of color c as (a,b) with a < b, sorted.
  std::vector<Pair> edges(Color c) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  ColoredGraph(int n_colors, int num_vertices, std::vector<Vertex> adj);
  int n_colors_ = 0;
  int num_vertices_ = 0;
  std::vector<Vertex> adj_;
};

ComponentLabeling restrict(const ColoredGraph& g, ColorSet colors);
int component_count(const ColoredGraph& g, ColorSet colors);

struct ContractedReport {
  bool contracted = false;
  std::vector<int> complement_counts;  // g of Δ∖{j}, j = 0..n
};
ContractedReport is_contracted(const ColoredGraph& g);

bool is_bipartite(const ColoredGraph& g);

// N_k = number of k-simplices of the dual complex, k = 0..n.
std::vector<long long> face_counts(const ColoredGraph& g);

// new_id[v] is the id of v in the result.
ColoredGraph relabel_vertices(const ColoredGraph& g, std::span<const Vertex> new_id);
// Color c of g becomes color sigma[c].
ColoredGraph permute_colors(const ColoredGraph& g, std::span<const Color> sigma);

}  // namespace gem
