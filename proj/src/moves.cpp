#include "gem/moves.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "gem/errors.hpp"

namespace gem {

namespace {

std::string vname(Vertex v) { return std::to_string(v); }

void check_vertex(const ColoredGraph& g, Vertex v) {
  if (v < 0 || v >= g.num_vertices())
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + vname(v) + " not in 0.." + vname(g.num_vertices() - 1));
}

void check_color(const ColoredGraph& g, Color c) {
  if (c < 0 || c >= g.n_colors())
    throw Error(ErrorKind::ColorOutOfRange, "color " + std::to_string(c) + " not in 0.." + std::to_string(g.n_colors() - 1));
}

void check_colors(const ColoredGraph& g, ColorSet s) {
  if ((s.bits() & ~ColorSet::all(g.n_colors()).bits()) != 0)
    throw Error(ErrorKind::ColorOutOfRange, "color set exceeds 0.." + std::to_string(g.n_colors() - 1));
}

// Deletes lambda1 and lambda2; for every color outside `kept`, the outer neighbor
// of u in lambda1 is joined to the outer neighbor of phi(u). Preconditions are the
// caller's; any dangling edge surfaces as ResultInvalid.
MoveResult rewire(const ColoredGraph& g, ColorSet kept, const std::vector<Vertex>& lambda1,
                  const std::vector<Vertex>& lambda2) {
  const int V = g.num_vertices();
  const int nc = g.n_colors();
  std::vector<char> dead(V, 0), in1(V, 0);
  for (Vertex u : lambda1) dead[u] = in1[u] = 1;
  for (Vertex u : lambda2) dead[u] = 1;

  std::vector<std::vector<Vertex>> inv(nc);
  for (Color c = 0; c < nc; ++c) {
    auto src = g.involution(c);
    inv[c].assign(src.begin(), src.end());
    if (kept.contains(c)) continue;
    for (std::size_t k = 0; k < lambda1.size(); ++k) {
      Vertex p = src[lambda1[k]];
      if (in1[p]) continue;
      Vertex q = src[lambda2[k]];
      if (dead[p] || dead[q])
        throw Error(ErrorKind::ResultInvalid, "color " + std::to_string(c) + " edge would dangle at vertex " +
                                                  vname(dead[p] ? p : q));
      inv[c][p] = q;
      inv[c][q] = p;
    }
  }

  std::vector<Vertex> old_to_new(V, -1);
  int next = 0;
  for (Vertex v = 0; v < V; ++v)
    if (!dead[v]) old_to_new[v] = next++;
  if (next < 2) throw Error(ErrorKind::ResultInvalid, "move would leave fewer than two vertices");
  std::vector<std::vector<Vertex>> out(nc, std::vector<Vertex>(next));
  for (Color c = 0; c < nc; ++c)
    for (Vertex v = 0; v < V; ++v) {
      if (dead[v]) continue;
      Vertex w = old_to_new[inv[c][v]];
      if (w < 0) throw Error(ErrorKind::ResultInvalid, "color " + std::to_string(c) + " edge dangles at vertex " + vname(v));
      out[c][old_to_new[v]] = w;
    }
  try {
    return MoveResult{ColoredGraph::from_involutions(std::move(out)), std::move(old_to_new)};
  } catch (const Error& e) {
    throw Error(ErrorKind::ResultInvalid, e.what());
  }
}

}  // namespace

void check_dipole(const ColoredGraph& g, const DipoleSpec& d) {
  check_vertex(g, d.v1);
  check_vertex(g, d.v2);
  check_colors(g, d.colors);
  const int h = d.colors.size();
  if (d.v1 == d.v2) throw Error(ErrorKind::NotADipole, "v1 = v2");
  if (h < 1 || h > g.dimension())
    throw Error(ErrorKind::NotADipole, "dipole needs 1.." + std::to_string(g.dimension()) + " colors, got " + std::to_string(h));
  if (g.joining(d.v1, d.v2) != d.colors)
    throw Error(ErrorKind::NotADipole, "vertices " + vname(d.v1) + " and " + vname(d.v2) +
                                           " are not joined by exactly the dipole colors");
  auto lab = restrict(g, d.colors.complement(g.n_colors()));
  if (lab.id[d.v1] == lab.id[d.v2])
    throw Error(ErrorKind::NotADipole, "vertices " + vname(d.v1) + " and " + vname(d.v2) +
                                           " share a component of the complementary-color subgraph");
}

std::vector<DipoleSpec> find_dipoles(const ColoredGraph& g, int h) {
  if (h < 1 || h > g.dimension())
    throw Error(ErrorKind::BadMoveSpec, "dipole size must be in 1.." + std::to_string(g.dimension()));
  std::unordered_map<std::uint32_t, ComponentLabeling> cache;
  std::vector<DipoleSpec> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    ColorSet seen;
    for (Color c = 0; c < g.n_colors(); ++c) {
      Vertex w = g.neighbor(c, v);
      if (w <= v || seen.contains(c)) continue;
      ColorSet joint = g.joining(v, w);
      for (Color x : joint.colors()) seen = seen.with(x);
      if (joint.size() != h) continue;
      ColorSet rest = joint.complement(g.n_colors());
      auto it = cache.find(rest.bits());
      if (it == cache.end()) it = cache.emplace(rest.bits(), restrict(g, rest)).first;
      if (it->second.id[v] != it->second.id[w]) out.push_back({v, w, joint});
    }
  }
  std::sort(out.begin(), out.end(), [](const DipoleSpec& a, const DipoleSpec& b) {
    return std::pair(a.v1, a.v2) < std::pair(b.v1, b.v2);
  });
  return out;
}

MoveResult cancel_dipole(const ColoredGraph& g, const DipoleSpec& d) {
  check_dipole(g, d);
  return rewire(g, d.colors, {d.v1}, {d.v2});
}

MoveResult add_dipole(const ColoredGraph& g, Vertex at_vertex, ColorSet colors) {
  check_vertex(g, at_vertex);
  check_colors(g, colors);
  if (colors.size() < 1 || colors.size() > g.dimension())
    throw Error(ErrorKind::BadMoveSpec, "dipole needs 1.." + std::to_string(g.dimension()) + " colors");
  const int V = g.num_vertices();
  const Vertex x = V, y = V + 1;
  std::vector<std::vector<Vertex>> inv(g.n_colors());
  for (Color c = 0; c < g.n_colors(); ++c) {
    auto src = g.involution(c);
    inv[c].assign(src.begin(), src.end());
    inv[c].resize(V + 2);
    if (colors.contains(c)) {
      inv[c][x] = y;
      inv[c][y] = x;
    } else {
      Vertex w = src[at_vertex];
      inv[c][at_vertex] = x;
      inv[c][x] = at_vertex;
      inv[c][w] = y;
      inv[c][y] = w;
    }
  }
  MoveResult r{ColoredGraph::from_involutions(std::move(inv)), std::vector<Vertex>(V)};
  for (Vertex v = 0; v < V; ++v) r.old_to_new[v] = v;
  return r;
}

MoveResult polyhedral_glue(const ColoredGraph& g, const GlueMoveSpec& m) {
  check_color(g, m.color);
  const auto& L1 = m.lambda1;
  const auto& L2 = m.lambda2;
  if (L1.empty() || L1.size() != L2.size())
    throw Error(ErrorKind::BadMoveSpec, "lambda sets must be non-empty and of equal size");
  const int V = g.num_vertices();
  std::vector<int> where(V, 0);  // 1: lambda1, 2: lambda2
  std::vector<Vertex> phi(V, -1);
  for (std::size_t k = 0; k < L1.size(); ++k) {
    check_vertex(g, L1[k]);
    check_vertex(g, L2[k]);
    if (where[L1[k]] || where[L2[k]] || L1[k] == L2[k])
      throw Error(ErrorKind::BadMoveSpec, "lambda sets must be disjoint and without repeats");
    where[L1[k]] = 1;
    where[L2[k]] = 2;
    phi[L1[k]] = L2[k];
  }
  for (std::size_t k = 0; k < L1.size(); ++k)
    if (g.neighbor(m.color, L1[k]) != L2[k])
      throw Error(ErrorKind::MissingIColoredMatching, "vertex " + vname(L1[k]) + " is not joined to " + vname(L2[k]) +
                                                          " by color " + std::to_string(m.color));
  for (Color c = 0; c < g.n_colors(); ++c) {
    if (c == m.color) continue;
    for (std::size_t k = 0; k < L1.size(); ++k) {
      Vertex p = g.neighbor(c, L1[k]);
      Vertex q = g.neighbor(c, L2[k]);
      bool ok = where[p] == 1 ? q == phi[p] : where[q] != 2;
      if (!ok)
        throw Error(ErrorKind::PhiNotIsomorphism, "color " + std::to_string(c) + " edge at " + vname(L1[k]) +
                                                      " is not carried to " + vname(L2[k]));
    }
  }
  auto lab = restrict(g, ColorSet::all(g.n_colors()).without(m.color));
  std::vector<char> comp1(lab.count, 0);
  for (Vertex u : L1) comp1[lab.id[u]] = 1;
  for (Vertex u : L2)
    if (comp1[lab.id[u]])
      throw Error(ErrorKind::SameComponentInIHat, "vertex " + vname(u) + " shares a component of the graph without color " +
                                                      std::to_string(m.color) + " with the first set");
  return rewire(g, ColorSet{m.color}, L1, L2);
}

MoveResult combined_move(const ColoredGraph& g, const CombinedMoveSpec& m) {
  for (Vertex v : {m.v1, m.v2, m.v1p, m.v2p}) check_vertex(g, v);
  for (Color c : {m.i, m.j, m.k}) check_color(g, c);
  auto fail = [](const std::string& clause) { throw Error(ErrorKind::PreconditionFailed, clause); };
  if (m.i == m.j || m.i == m.k || m.j == m.k) fail("colors i, j, k must be distinct");
  {
    std::vector<Vertex> vs{m.v1, m.v2, m.v1p, m.v2p};
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) fail("the four vertices must be distinct");
  }
  const ColorSet ij{m.i, m.j};
  if (g.joining(m.v1, m.v1p) != ij) fail("v1 and v1p are not joined by exactly the colors {i,j}");
  if (g.joining(m.v2, m.v2p) != ij) fail("v2 and v2p are not joined by exactly the colors {i,j}");
  if (g.neighbor(m.k, m.v1) != m.v2) fail("v1 and v2 are not joined by color k");
  if (g.neighbor(m.k, m.v1p) != m.v2p) fail("v1p and v2p are not joined by color k");
  const ColorSet all = ColorSet::all(g.n_colors());
  {
    auto lab = restrict(g, ColorSet(all.bits() & ~ij.bits()).without(m.k));
    std::vector<int> ids{lab.id[m.v1], lab.id[m.v2], lab.id[m.v1p], lab.id[m.v2p]};
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
      fail("the four vertices do not lie in four distinct components of the graph without colors {i,j,k}");
  }
  {
    auto lab = restrict(g, ColorSet(all.bits() & ~ij.bits()));
    if (lab.id[m.v1] == lab.id[m.v1p])
      fail("the two pairs share a component of the graph without colors {i,j}");
  }
  return rewire(g, ij, {m.v1, m.v2}, {m.v1p, m.v2p});
}

LabeledGem relabel_after(const LabeledGem& before, const MoveResult& r) {
  std::vector<std::string> labels(r.graph.num_vertices());
  const int old_v = before.num_vertices();
  for (Vertex v = 0; v < old_v; ++v)
    if (r.old_to_new[v] >= 0) labels[r.old_to_new[v]] = before.label(v);
  // Vertices created by the move get fresh labels.
  int fresh = 0;
  for (auto& l : labels) {
    if (!l.empty()) continue;
    do {
      l = "x" + std::to_string(fresh++);
    } while (before.find(l) >= 0);
  }
  return LabeledGem(r.graph, std::move(labels));
}

// ---- script text -----------------------------------------------------------

namespace {

class Cursor {
 public:
  Cursor(std::string_view s, int line) : s_(s), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg, line_, static_cast<int>(pos_) + 1);
  }
  void expect(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) != tok) fail("expected '" + std::string(tok) + "'");
    pos_ += tok.size();
  }
  // A label: run of characters not in the delimiter set.
  std::string word(std::string_view stops) {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           stops.find(s_[pos_]) == std::string_view::npos)
      ++pos_;
    if (b == pos_) fail("expected a vertex label");
    return std::string(s_.substr(b, pos_ - b));
  }
  int integer() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a color");
    if (pos_ - b > 2) fail("color out of range");
    return std::stoi(std::string(s_.substr(b, pos_ - b)));
  }
  std::vector<std::string> list(char open, char close) {
    expect(std::string(1, open));
    std::vector<std::string> out;
    const std::string stops = std::string(",") + close;
    while (true) {
      out.push_back(word(stops));
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect(std::string(1, close));
      return out;
    }
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + xs[k];
  return out;
}

}  // namespace

MoveScript parse_move_script(std::string_view text) {
  MoveScript script;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor cur(line, line_no);
    if (cur.done()) {
      if (end == text.size()) break;
      continue;
    }
    std::string verb = cur.word("");
    ScriptStep step;
    step.line = line_no;
    if (verb == "dipole") {
      DipoleStep d;
      d.v1 = cur.word("");
      d.v2 = cur.word("");
      while (true) {
        int c = cur.integer();
        if (c >= kMaxColors) cur.fail("color out of range");
        d.colors = d.colors.with(c);
        cur.skip_ws();
        if (cur.done()) break;
        cur.expect(",");
      }
      step.move = d;
    } else if (verb == "glue") {
      GlueStep s;
      s.color = cur.integer();
      s.lambda1 = cur.list('[', ']');
      cur.expect("->");
      s.lambda2 = cur.list('[', ']');
      if (s.lambda1.size() != s.lambda2.size()) cur.fail("glue sets differ in size");
      step.move = s;
    } else if (verb == "combined") {
      CombinedStep s;
      s.k = cur.integer();
      cur.expect("{");
      s.i = cur.integer();
      cur.expect(",");
      s.j = cur.integer();
      cur.expect("}");
      auto a = cur.list('(', ')');
      auto b = cur.list('(', ')');
      if (a.size() != 2 || b.size() != 2) cur.fail("combined move takes two pairs of vertices");
      s.v1 = a[0];
      s.v2 = a[1];
      s.v1p = b[0];
      s.v2p = b[1];
      step.move = s;
    } else {
      throw Error(ErrorKind::ParseError, "unknown move '" + verb + "'", line_no, 1);
    }
    if (!cur.done()) cur.fail("trailing text");
    script.push_back(std::move(step));
    if (end == text.size()) break;
  }
  return script;
}

std::string render_move_script(const MoveScript& script) {
  std::ostringstream out;
  for (const auto& step : script) {
    if (auto* d = std::get_if<DipoleStep>(&step.move)) {
      std::vector<std::string> cs;
      for (Color c : d->colors.colors()) cs.push_back(std::to_string(c));
      out << "dipole " << d->v1 << ' ' << d->v2 << ' ' << join(cs) << '\n';
    } else if (auto* s = std::get_if<GlueStep>(&step.move)) {
      out << "glue " << s->color << " [" << join(s->lambda1) << "] -> [" << join(s->lambda2) << "]\n";
    } else if (auto* c = std::get_if<CombinedStep>(&step.move)) {
      out << "combined " << c->k << " {" << c->i << ',' << c->j << "} (" << c->v1 << ',' << c->v2 << ") (" << c->v1p
          << ',' << c->v2p << ")\n";
    }
  }
  return out.str();
}

ScriptResult run_script(const LabeledGem& g, const MoveScript& script) {
  ScriptResult out{g, {g.num_vertices()}};
  for (std::size_t idx = 0; idx < script.size(); ++idx) {
    const ScriptStep& step = script[idx];
    try {
      const LabeledGem& cur = out.gem;
      MoveResult r = std::visit(
          [&](const auto& mv) -> MoveResult {
            using T = std::decay_t<decltype(mv)>;
            if constexpr (std::is_same_v<T, DipoleStep>) {
              return cancel_dipole(cur.graph(), DipoleSpec{cur.at(mv.v1), cur.at(mv.v2), mv.colors});
            } else if constexpr (std::is_same_v<T, GlueStep>) {
              GlueMoveSpec spec;
              spec.color = mv.color;
              for (const auto& l : mv.lambda1) spec.lambda1.push_back(cur.at(l));
              for (const auto& l : mv.lambda2) spec.lambda2.push_back(cur.at(l));
              return polyhedral_glue(cur.graph(), spec);
            } else {
              return combined_move(cur.graph(), CombinedMoveSpec{cur.at(mv.v1), cur.at(mv.v2), cur.at(mv.v1p),
                                                                 cur.at(mv.v2p), mv.i, mv.j, mv.k});
            }
          },
          step.move);
      out.gem = relabel_after(cur, r);
    } catch (const Error& e) {
      throw Error(e.kind(), "step " + std::to_string(idx + 1) + ": " + e.message(), step.line);
    }
    out.trace.push_back(out.gem.num_vertices());
  }
  return out;
}

}  // namespace gem
