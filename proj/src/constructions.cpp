#include "gem/constructions.hpp"

#include <algorithm>
#include <set>

#include "gem/data.hpp"
#include "gem/errors.hpp"
#include "gem/gem_io.hpp"
#include "gem/invariants.hpp"

namespace gem {

namespace {

void audit(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::AuditFailed, what);
}

void audit_cycles(const ColoredGraph& g, Color i, Color j, int count, int length, const std::string& name) {
  auto lens = bicolored_cycle_lengths(g, i, j);
  bool ok = static_cast<int>(lens.size()) == count &&
            std::all_of(lens.begin(), lens.end(), [&](int l) { return l == length; });
  audit(ok, name + ": expected " + std::to_string(count) + " {" + std::to_string(i) + "," + std::to_string(j) +
                "}-cycles of length " + std::to_string(length));
}

bool in_pairs(Color i, Color j, const std::vector<std::pair<Color, Color>>& ps) {
  return std::find(ps.begin(), ps.end(), std::pair{std::min(i, j), std::max(i, j)}) != ps.end();
}

}  // namespace

LabeledGem s2xs1_standard() {
  LabeledGem g = parse_gem(data_file("s2xs1.gem"));
  audit(g.num_vertices() == 8 && g.graph().n_colors() == 4, "s2xs1: expected 8 vertices and 4 colors");
  audit(is_contracted(g.graph()).contracted, "s2xs1: not contracted");
  audit(is_bipartite(g.graph()), "s2xs1: not bipartite");
  return g;
}

LabeledGem t3_standard() {
  LabeledGem g = parse_gem(data_file("t3.gem"));
  const auto& G = g.graph();
  audit(g.num_vertices() == 24 && G.n_colors() == 4, "t3: expected 24 vertices and 4 colors");
  audit(is_contracted(G).contracted, "t3: not contracted");
  audit(is_bipartite(G), "t3: not bipartite");
  for (Color i = 0; i < 4; ++i)
    for (Color j = i + 1; j < 4; ++j) {
      if (in_pairs(i, j, {{0, 2}, {1, 3}}))
        audit_cycles(G, i, j, 6, 4, "t3");
      else
        audit_cycles(G, i, j, 4, 6, "t3");
    }
  return g;
}

const std::array<BlockMap, 4>& product_blocks() {
  static const std::array<BlockMap, 4> blocks{{
      {'A', {{0, 4}, {1, 0}, {2, 1}}},
      {'B', {{0, 4}, {1, 0}, {3, 3}}},
      {'C', {{0, 4}, {2, 2}, {3, 3}}},
      {'D', {{1, 1}, {2, 2}, {3, 3}}},
  }};
  return blocks;
}

LabeledGem product_gem(const LabeledGem& base) {
  const auto& B = base.graph();
  if (B.n_colors() != 4) throw Error(ErrorKind::BaseNotCrystallization, "base must have 4 colors");
  if (!is_contracted(B).contracted) throw Error(ErrorKind::BaseNotCrystallization, "base is not contracted");
  const int p = B.num_vertices();
  // Block order: D C B A D' C' B' A'.
  const std::string order = "DCBA";
  auto offset = [&](char blk, bool primed) {
    return static_cast<Vertex>(((primed ? 4 : 0) + order.find(blk)) * p);
  };
  const int V = 8 * p;
  std::vector<std::vector<Vertex>> inv(5, std::vector<Vertex>(V, -1));
  auto join = [&](Color c, Vertex a, Vertex b) {
    inv[c][a] = b;
    inv[c][b] = a;
  };
  std::vector<std::string> labels(V);
  for (bool primed : {false, true}) {
    for (const auto& blk : product_blocks()) {
      Vertex off = offset(blk.name, primed);
      for (Vertex v = 0; v < p; ++v)
        labels[off + v] = base.label(v) + "^{" + blk.name + (primed ? "'" : "") + "}";
      for (auto [bc, nc] : blk.colors)
        for (auto [a, b] : B.edges(bc)) join(nc, off + a, off + b);
    }
    const std::array<std::tuple<char, char, Color>, 3> links{{{'A', 'B', 2}, {'B', 'C', 1}, {'C', 'D', 0}}};
    for (auto [x, y, c] : links)
      for (Vertex v = 0; v < p; ++v) join(c, offset(x, primed) + v, offset(y, primed) + v);
  }
  for (Vertex v = 0; v < p; ++v) {
    join(3, offset('A', false) + v, offset('A', true) + v);
    join(4, offset('D', false) + v, offset('D', true) + v);
  }
  return LabeledGem(ColoredGraph::from_involutions(std::move(inv)), std::move(labels));
}

MoveScript g1_prime_script() { return parse_move_script(data_file("g1prime.moves")); }
MoveScript g2_prime_script() { return parse_move_script(data_file("g2prime.moves")); }

Reduction g1_prime_reduction() {
  auto r = run_script(product_gem(s2xs1_standard()), g1_prime_script());
  return {std::move(r.gem), std::move(r.trace)};
}

Reduction g2_prime_reduction() {
  auto r = run_script(product_gem(t3_standard()), g2_prime_script());
  return {std::move(r.gem), std::move(r.trace)};
}

LabeledGem g1_prime() { return g1_prime_reduction().gem; }
LabeledGem g2_prime() { return g2_prime_reduction().gem; }

namespace {

const std::vector<std::pair<Color, Color>> kTenPairs{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};

}  // namespace

LabeledGem g1_prime_figure() {
  LabeledGem g = parse_gem(data_file("g1prime_fig.gem"));
  const auto& G = g.graph();
  audit(g.num_vertices() == 40 && G.n_colors() == 5, "g1prime figure: expected 40 vertices and 5 colors");
  audit(is_contracted(G).contracted, "g1prime figure: not contracted");
  auto pc = pair_counts(G);
  for (Color i = 0; i < 5; ++i)
    for (Color j = i + 1; j < 5; ++j) {
      int want = in_pairs(i, j, kTenPairs) ? 10 : 8;
      audit(pc[i][j] == want, "g1prime figure: g_{" + std::to_string(i) + std::to_string(j) + "} = " +
                                  std::to_string(pc[i][j]) + ", expected " + std::to_string(want));
    }
  return g;
}

LabeledGem g2_prime_figure() {
  LabeledGem g = parse_gem(data_file("g2prime_fig.gem"));
  const auto& G = g.graph();
  audit(g.num_vertices() == 120 && G.n_colors() == 5, "g2prime figure: expected 120 vertices and 5 colors");
  audit(is_contracted(G).contracted, "g2prime figure: not contracted");
  for (auto [i, j] : kTenPairs) audit_cycles(G, i, j, 30, 4, "g2prime figure");
  return g;
}

std::vector<std::string> construction_names() {
  return {"s2xs1", "t3", "g1prime", "g2prime", "g1prime-figure", "g2prime-figure"};
}

LabeledGem build_named(const std::string& name) {
  if (name == "s2xs1") return s2xs1_standard();
  if (name == "t3") return t3_standard();
  if (name == "g1prime") return g1_prime();
  if (name == "g2prime") return g2_prime();
  if (name == "g1prime-figure") return g1_prime_figure();
  if (name == "g2prime-figure") return g2_prime_figure();
  throw Error(ErrorKind::MissingData, "unknown construction '" + name + "'");
}

}  // namespace gem
