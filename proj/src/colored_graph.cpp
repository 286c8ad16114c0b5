#include "gem/colored_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gem/errors.hpp"

namespace gem {

namespace {

std::string vtx(Vertex v) { return std::to_string(v); }

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<int> parent_;
};

void check_color(const ColoredGraph& g, Color c) {
  if (c < 0 || c >= g.n_colors())
    throw Error(ErrorKind::ColorOutOfRange, "color " + std::to_string(c) + " not in 0.." + std::to_string(g.n_colors() - 1));
}

}  // namespace

ColorSet::ColorSet(std::initializer_list<Color> colors) {
  for (Color c : colors) {
    if (c < 0 || c >= kMaxColors) throw Error(ErrorKind::ColorOutOfRange, "color " + std::to_string(c));
    bits_ |= 1u << c;
  }
}

ColorSet ColorSet::of(std::span<const Color> colors) {
  ColorSet s;
  for (Color c : colors) {
    if (c < 0 || c >= kMaxColors) throw Error(ErrorKind::ColorOutOfRange, "color " + std::to_string(c));
    s = s.with(c);
  }
  return s;
}

std::vector<Color> ColorSet::colors() const {
  std::vector<Color> out;
  for (Color c = 0; c < 32; ++c)
    if (contains(c)) out.push_back(c);
  return out;
}

ColoredGraph::ColoredGraph(int n_colors, int num_vertices, std::vector<Vertex> adj)
    : n_colors_(n_colors), num_vertices_(num_vertices), adj_(std::move(adj)) {}

ColoredGraph ColoredGraph::from_pairs(int n_colors, int num_vertices,
                                      const std::vector<std::vector<Pair>>& pairs) {
  if (n_colors < 2 || n_colors > kMaxColors)
    throw Error(ErrorKind::ColorOutOfRange, "need 2.." + std::to_string(kMaxColors) + " colors, got " + std::to_string(n_colors));
  if (num_vertices < 2)
    throw Error(ErrorKind::VertexCountMismatch, "need at least 2 vertices, got " + std::to_string(num_vertices));
  if (num_vertices % 2 != 0)
    throw Error(ErrorKind::OddVertexCount, std::to_string(num_vertices) + " vertices");
  if (static_cast<int>(pairs.size()) != n_colors)
    throw Error(ErrorKind::VertexCountMismatch,
                "expected " + std::to_string(n_colors) + " pair lists, got " + std::to_string(pairs.size()));
  std::vector<Vertex> adj(static_cast<std::size_t>(n_colors) * num_vertices, -1);
  for (Color c = 0; c < n_colors; ++c) {
    Vertex* inv = adj.data() + static_cast<std::size_t>(c) * num_vertices;
    for (auto [a, b] : pairs[c]) {
      if (a < 0 || a >= num_vertices || b < 0 || b >= num_vertices)
        throw Error(ErrorKind::VertexOutOfRange, "color " + std::to_string(c) + ": pair " + vtx(a) + "-" + vtx(b));
      if (a == b) throw Error(ErrorKind::LoopEdge, "color " + std::to_string(c) + ": loop at " + vtx(a));
      for (Vertex x : {a, b})
        if (inv[x] != -1)
          throw Error(ErrorKind::DuplicateVertexInColor, "color " + std::to_string(c) + ": vertex " + vtx(x) + " twice");
      inv[a] = b;
      inv[b] = a;
    }
    if (static_cast<long long>(pairs[c].size()) * 2 != num_vertices)
      throw Error(ErrorKind::VertexCountMismatch, "color " + std::to_string(c) + " covers " +
                                                      std::to_string(pairs[c].size() * 2) + " of " +
                                                      std::to_string(num_vertices) + " vertices");
  }
  return ColoredGraph(n_colors, num_vertices, std::move(adj));
}

ColoredGraph ColoredGraph::from_involutions(std::vector<std::vector<Vertex>> involutions) {
  int n_colors = static_cast<int>(involutions.size());
  if (n_colors < 2 || n_colors > kMaxColors)
    throw Error(ErrorKind::ColorOutOfRange, "need 2.." + std::to_string(kMaxColors) + " colors, got " + std::to_string(n_colors));
  int V = static_cast<int>(involutions[0].size());
  if (V < 2) throw Error(ErrorKind::VertexCountMismatch, "need at least 2 vertices");
  if (V % 2 != 0) throw Error(ErrorKind::OddVertexCount, std::to_string(V) + " vertices");
  std::vector<Vertex> adj;
  adj.reserve(static_cast<std::size_t>(n_colors) * V);
  for (Color c = 0; c < n_colors; ++c) {
    const auto& inv = involutions[c];
    if (static_cast<int>(inv.size()) != V)
      throw Error(ErrorKind::VertexCountMismatch, "color " + std::to_string(c) + " has " + std::to_string(inv.size()) + " entries");
    for (Vertex v = 0; v < V; ++v) {
      Vertex w = inv[v];
      if (w < 0 || w >= V) throw Error(ErrorKind::VertexOutOfRange, "color " + std::to_string(c) + ": " + vtx(v) + "->" + vtx(w));
      if (w == v) throw Error(ErrorKind::LoopEdge, "color " + std::to_string(c) + ": loop at " + vtx(v));
      if (inv[w] != v)
        throw Error(ErrorKind::DuplicateVertexInColor, "color " + std::to_string(c) + ": not an involution at " + vtx(v));
    }
    adj.insert(adj.end(), inv.begin(), inv.end());
  }
  return ColoredGraph(n_colors, V, std::move(adj));
}

ColorSet ColoredGraph::joining(Vertex u, Vertex v) const {
  ColorSet s;
  for (Color c = 0; c < n_colors_; ++c)
    if (neighbor(c, u) == v) s = s.with(c);
  return s;
}

std::vector<Pair> ColoredGraph::edges(Color c) const {
  check_color(*this, c);
  std::vector<Pair> out;
  out.reserve(num_vertices_ / 2);
  for (Vertex v = 0; v < num_vertices_; ++v) {
    Vertex w = neighbor(c, v);
    if (v < w) out.emplace_back(v, w);
  }
  return out;
}

ComponentLabeling restrict(const ColoredGraph& g, ColorSet colors) {
  if ((colors.bits() & ~ColorSet::all(g.n_colors()).bits()) != 0)
    throw Error(ErrorKind::ColorOutOfRange, "color set exceeds 0.." + std::to_string(g.n_colors() - 1));
  const int V = g.num_vertices();
  UnionFind uf(V);
  for (Color c : colors.colors()) {
    auto inv = g.involution(c);
    for (Vertex v = 0; v < V; ++v)
      if (v < inv[v]) uf.unite(v, inv[v]);
  }
  ComponentLabeling out;
  out.id.assign(V, -1);
  std::vector<int> root_id(V, -1);
  for (Vertex v = 0; v < V; ++v) {
    int r = uf.find(v);
    if (root_id[r] < 0) root_id[r] = out.count++;
    out.id[v] = root_id[r];
  }
  return out;
}

int component_count(const ColoredGraph& g, ColorSet colors) { return restrict(g, colors).count; }

ContractedReport is_contracted(const ColoredGraph& g) {
  ContractedReport r;
  r.contracted = true;
  ColorSet all = ColorSet::all(g.n_colors());
  for (Color j = 0; j < g.n_colors(); ++j) {
    int k = component_count(g, all.without(j));
    r.complement_counts.push_back(k);
    if (k != 1) r.contracted = false;
  }
  return r;
}

bool is_bipartite(const ColoredGraph& g) {
  const int V = g.num_vertices();
  std::vector<int> side(V, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < V; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Color c = 0; c < g.n_colors(); ++c) {
        Vertex w = g.neighbor(c, v);
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<long long> face_counts(const ColoredGraph& g) {
  const int nc = g.n_colors();
  std::vector<long long> N(nc, 0);
  const std::uint32_t full = ColorSet::all(nc).bits();
  for (std::uint32_t C = 1; C <= full; ++C) {
    int k = __builtin_popcount(C) - 1;
    N[k] += component_count(g, ColorSet(full & ~C));
  }
  return N;
}

ColoredGraph relabel_vertices(const ColoredGraph& g, std::span<const Vertex> new_id) {
  const int V = g.num_vertices();
  if (static_cast<int>(new_id.size()) != V)
    throw Error(ErrorKind::VertexCountMismatch, "relabeling has " + std::to_string(new_id.size()) + " entries");
  std::vector<std::vector<Vertex>> inv(g.n_colors(), std::vector<Vertex>(V, -1));
  for (Color c = 0; c < g.n_colors(); ++c)
    for (Vertex v = 0; v < V; ++v) {
      Vertex a = new_id[v];
      if (a < 0 || a >= V || inv[c][a] != -1)
        throw Error(ErrorKind::VertexOutOfRange, "relabeling is not a permutation");
      inv[c][a] = new_id[g.neighbor(c, v)];
    }
  return ColoredGraph::from_involutions(std::move(inv));
}

ColoredGraph permute_colors(const ColoredGraph& g, std::span<const Color> sigma) {
  const int nc = g.n_colors();
  if (static_cast<int>(sigma.size()) != nc)
    throw Error(ErrorKind::PermutationColorMismatch, "color map has " + std::to_string(sigma.size()) + " entries");
  std::vector<std::vector<Vertex>> inv(nc);
  for (Color c = 0; c < nc; ++c) {
    Color d = sigma[c];
    if (d < 0 || d >= nc || !inv[d].empty())
      throw Error(ErrorKind::PermutationColorMismatch, "color map is not a permutation");
    auto src = g.involution(c);
    inv[d].assign(src.begin(), src.end());
  }
  return ColoredGraph::from_involutions(std::move(inv));
}

}  // namespace gem
