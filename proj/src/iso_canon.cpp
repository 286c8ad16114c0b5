#include "gem/iso_canon.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gem/errors.hpp"

namespace gem {

namespace {

// Vertex colouring invariant under relabeling: start from the bi-colored cycle
// lengths at each vertex, then refine by neighbour colours until stable. Cell ids
// come from sorted signatures, so they do not depend on vertex numbering.
std::vector<int> refined_cells(const ColoredGraph& g) {
  const int V = g.num_vertices(), nc = g.n_colors();
  std::vector<std::vector<int>> sig(V);
  for (Color i = 0; i < nc; ++i)
    for (Color j = i + 1; j < nc; ++j) {
      auto lab = restrict(g, ColorSet{i, j});
      std::vector<int> size(lab.count, 0);
      for (Vertex v = 0; v < V; ++v) ++size[lab.id[v]];
      for (Vertex v = 0; v < V; ++v) sig[v].push_back(size[lab.id[v]]);
    }
  auto renumber = [&](std::vector<int>& cell) {
    std::map<std::vector<int>, int> ids;
    for (auto& s : sig) ids.emplace(s, 0);
    int k = 0;
    for (auto& [s, id] : ids) id = k++;
    for (Vertex v = 0; v < V; ++v) cell[v] = ids[sig[v]];
    return k;
  };
  std::vector<int> cell(V);
  int count = renumber(cell);
  for (;;) {
    for (Vertex v = 0; v < V; ++v) {
      sig[v].assign(1, cell[v]);
      for (Color c = 0; c < nc; ++c) sig[v].push_back(cell[g.neighbor(c, v)]);
    }
    int next = renumber(cell);
    if (next == count) break;
    count = next;
  }
  return cell;
}

// BFS code from root in color order; aborts as soon as the code exceeds best.
// Returns true (and fills code/order) if strictly smaller than best or best empty.
bool bfs_code(const ColoredGraph& g, Vertex root, const std::vector<int>& best, std::vector<int>& code,
              std::vector<Vertex>& order, std::vector<int>& num) {
  const int nc = g.n_colors();
  code.clear();
  order.assign(1, root);
  num[root] = 0;
  bool smaller = best.empty();
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    for (Color c = 0; c < nc; ++c) {
      Vertex w = g.neighbor(c, v);
      if (num[w] < 0) {
        num[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
      int x = num[w];
      if (!smaller) {
        int b = best[code.size()];
        if (x > b) {
          for (Vertex u : order) num[u] = -1;
          return false;
        }
        if (x < b) smaller = true;
      }
      code.push_back(x);
    }
  }
  for (Vertex u : order) num[u] = -1;
  return smaller;
}

}  // namespace

CanonicalForm canonical_form(const ColoredGraph& g) {
  const int V = g.num_vertices();
  auto cell = refined_cells(g);
  auto comp = restrict(g, ColorSet::all(g.n_colors()));
  std::vector<std::vector<Vertex>> members(comp.count);
  for (Vertex v = 0; v < V; ++v) members[comp.id[v]].push_back(v);

  struct Part {
    std::vector<int> code;
    std::vector<Vertex> order;
  };
  std::vector<Part> parts;
  std::vector<int> num(V, -1), code;
  std::vector<Vertex> order;
  for (const auto& mem : members) {
    // smallest cell in this component, ties to the lower cell id
    std::map<int, int> size;
    for (Vertex v : mem) ++size[cell[v]];
    int pick = -1, best_size = V + 1;
    for (auto [c, s] : size)
      if (s < best_size) best_size = s, pick = c;
    Part p;
    for (Vertex v : mem) {
      if (cell[v] != pick) continue;
      if (bfs_code(g, v, p.code, code, order, num)) {
        p.code = code;
        p.order = order;
      }
    }
    parts.push_back(std::move(p));
  }
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.code.size() != b.code.size()) return a.code.size() < b.code.size();
    return a.code < b.code;
  });
  CanonicalForm f;
  f.code = {g.n_colors(), V, comp.count};
  for (auto& p : parts) {
    f.code.push_back(static_cast<int>(p.order.size()));
    f.code.insert(f.code.end(), p.code.begin(), p.code.end());
    f.order.insert(f.order.end(), p.order.begin(), p.order.end());
  }
  return f;
}

CanonicalColoredForm canonical_colored_form(const ColoredGraph& g) {
  std::vector<Color> sigma(g.n_colors());
  std::iota(sigma.begin(), sigma.end(), 0);
  CanonicalColoredForm best;
  bool first = true;
  do {
    auto f = canonical_form(permute_colors(g, sigma));
    if (first || f.code < best.form.code) {
      best.form = std::move(f);
      best.color_map = sigma;
      first = false;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

std::string CanonicalSignature::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CanonicalSignature canonical_signature(const ColoredGraph& g, CanonMode mode) {
  const auto code =
      mode == CanonMode::FixedColors ? canonical_form(g).code : canonical_colored_form(g).form.code;
  CanonicalSignature s;
  s.mode = mode;
  s.bytes = mode == CanonMode::FixedColors ? "F" : "P";
  for (int x : code) {
    s.bytes += ':';
    s.bytes += std::to_string(x);
  }
  return s;
}

bool verify_witness(const ColoredGraph& g, const ColoredGraph& h, const IsoWitness& w) {
  const int V = g.num_vertices(), nc = g.n_colors();
  if (h.num_vertices() != V || h.n_colors() != nc) return false;
  if (static_cast<int>(w.vertex_map.size()) != V || static_cast<int>(w.color_map.size()) != nc) return false;
  std::vector<char> seen(V, 0);
  for (Vertex x : w.vertex_map) {
    if (x < 0 || x >= V || seen[x]) return false;
    seen[x] = 1;
  }
  std::vector<char> cseen(nc, 0);
  for (Color c : w.color_map) {
    if (c < 0 || c >= nc || cseen[c]) return false;
    cseen[c] = 1;
  }
  for (Color c = 0; c < nc; ++c)
    for (Vertex v = 0; v < V; ++v)
      if (h.neighbor(w.color_map[c], w.vertex_map[v]) != w.vertex_map[g.neighbor(c, v)]) return false;
  return true;
}

std::optional<IsoWitness> isomorphic(const ColoredGraph& g, const ColoredGraph& h, bool allow_color_perm) {
  if (g.n_colors() != h.n_colors())
    throw Error(ErrorKind::ColorCountMismatch,
                std::to_string(g.n_colors()) + " vs " + std::to_string(h.n_colors()) + " colors");
  if (g.num_vertices() != h.num_vertices()) return std::nullopt;
  const int nc = g.n_colors();
  CanonicalForm fg, fh;
  std::vector<Color> sg(nc), sh(nc);
  std::iota(sg.begin(), sg.end(), 0);
  std::iota(sh.begin(), sh.end(), 0);
  if (allow_color_perm) {
    auto a = canonical_colored_form(g), b = canonical_colored_form(h);
    fg = std::move(a.form), sg = a.color_map;
    fh = std::move(b.form), sh = b.color_map;
  } else {
    fg = canonical_form(g);
    fh = canonical_form(h);
  }
  if (fg.code != fh.code) return std::nullopt;
  IsoWitness w;
  w.vertex_map.assign(g.num_vertices(), -1);
  for (std::size_t k = 0; k < fg.order.size(); ++k) w.vertex_map[fg.order[k]] = fh.order[k];
  std::vector<Color> sh_inv(nc);
  for (Color c = 0; c < nc; ++c) sh_inv[sh[c]] = c;
  w.color_map.resize(nc);
  for (Color c = 0; c < nc; ++c) w.color_map[c] = sh_inv[sg[c]];
  if (!verify_witness(g, h, w)) throw std::logic_error("isomorphism witness failed replay");
  return w;
}

}  // namespace gem
