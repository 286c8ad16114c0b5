#include "gem/small_covers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gem/data.hpp"
#include "gem/errors.hpp"
#include "gem/moves.hpp"

namespace gem {

namespace {

constexpr Z2Vector vec(int c1, int c2, int c3, int c4) {
  return static_cast<Z2Vector>(c1 | c2 << 1 | c3 << 2 | c4 << 3);
}

// Position t in the lexicographic order of (c1,c2,c3,c4).
Z2Vector vector_at(int t) { return vec((t >> 3) & 1, (t >> 2) & 1, (t >> 1) & 1, t & 1); }
int position_of(Z2Vector w) { return (w & 1) << 3 | ((w >> 1) & 1) << 2 | ((w >> 2) & 1) << 1 | ((w >> 3) & 1); }

int gf2_rank(std::vector<Z2Vector> rows) {
  int rank = 0;
  for (int bit = 0; bit < 4; ++bit) {
    auto it = std::find_if(rows.begin() + rank, rows.end(), [&](Z2Vector r) { return (r >> bit) & 1; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, it);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (static_cast<int>(k) != rank && ((rows[k] >> bit) & 1)) rows[k] ^= rows[rank];
    ++rank;
  }
  return rank;
}

std::string cover_label(Z2Vector w, int j) { return "T_{" + z2_word(w) + "}^" + std::to_string(j); }

struct CoverLabel {
  Z2Vector w;
  int j;
};
CoverLabel parse_cover_label(const std::string& s) {
  auto open = s.find("T_{"), close = s.find("}^");
  if (open != 0 || close == std::string::npos) throw Error(ErrorKind::UnknownLabel, "not a cover label: " + s);
  return {parse_z2_word(s.substr(3, close - 3)), std::stoi(s.substr(close + 2))};
}

std::vector<Vertex> component_of(const ColoredGraph& g, Vertex v, ColorSet colors) {
  auto lab = restrict(g, colors);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    if (lab.id[u] == lab.id[v]) out.push_back(u);
  return out;
}

// Glue lambda onto its color-c neighbours.
LabeledGem glue_onto(const LabeledGem& g, const std::vector<Vertex>& lambda, Color c) {
  GlueMoveSpec m{lambda, {}, c};
  for (Vertex u : lambda) m.lambda2.push_back(g.graph().neighbor(c, u));
  return relabel_after(g, polyhedral_glue(g.graph(), m));
}

std::set<std::string> label_set(const LabeledGem& g, const std::vector<Vertex>& vs) {
  std::set<std::string> s;
  for (Vertex v : vs) s.insert(g.label(v));
  return s;
}

// The one {cycle_colors}-cycle through a T^2 vertex that glues on color c, as
// labels. AuditFailed unless exactly one applies.
std::set<std::string> unique_applicable(const LabeledGem& g, ColorSet cycle_colors, Color c, const std::string& what) {
  const auto& G = g.graph();
  auto lab = restrict(G, cycle_colors);
  std::vector<char> tried(lab.count, 0);
  std::vector<std::set<std::string>> hits;
  for (Vertex v = 0; v < G.num_vertices(); ++v) {
    if (tried[lab.id[v]] || parse_cover_label(g.label(v)).j != 2) continue;
    tried[lab.id[v]] = 1;
    auto cyc = component_of(G, v, cycle_colors);
    try {
      glue_onto(g, cyc, c);
      hits.push_back(label_set(g, cyc));
    } catch (const Error&) {
    }
  }
  if (hits.size() != 1)
    throw Error(ErrorKind::AuditFailed, what + ": " + std::to_string(hits.size()) + " applicable glue moves, expected 1");
  return hits.front();
}

std::vector<Vertex> find_all(const LabeledGem& g, const std::vector<std::string>& labels) {
  std::vector<Vertex> out;
  for (const auto& l : labels) out.push_back(g.at(l));
  return out;
}

}  // namespace

std::string z2_word(Z2Vector w) {
  std::string s;
  for (int k = 0; k < 4; ++k)
    if ((w >> k) & 1) s += static_cast<char>('1' + k);
  return s.empty() ? "0" : s;
}

Z2Vector parse_z2_word(const std::string& s) {
  if (s == "0") return 0;
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty subscript");
  Z2Vector w = 0;
  char prev = '0';
  for (char ch : s) {
    if (ch < '1' || ch > '4' || ch <= prev) throw Error(ErrorKind::ParseError, "bad subscript '" + s + "'");
    w |= static_cast<Z2Vector>(1u << (ch - '1'));
    prev = ch;
  }
  return w;
}

bool facet_contains(int facet, GridPoint p) {
  switch (facet) {
    case 1: return p.j == 0 || p.j == 1;
    case 2: return p.j == 0 || p.j == 2;
    case 3: return p.i == 0 || p.i == 1;
    case 4: return p.i == 0 || p.i == 2;
    case 5: return p.j == 1 || p.j == 2;
    case 6: return p.i == 1 || p.i == 2;
    default: return false;
  }
}

std::vector<int> facets_at(GridPoint p) {
  std::vector<int> out;
  for (int f = 1; f <= 6; ++f)
    if (facet_contains(f, p)) out.push_back(f);
  return out;
}

const std::array<std::array<GridPoint, 5>, 6>& simplex_paths() {
  static const std::array<std::array<GridPoint, 5>, 6> paths{{
      {{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}}},
      {{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}}},
      {{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}}},
      {{{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}}},
      {{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}}},
      {{{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 2}}},
  }};
  return paths;
}

namespace {

std::array<std::array<SimplexFace, 5>, 6> faces_from_geometry() {
  const auto& T = simplex_paths();
  std::array<std::array<SimplexFace, 5>, 6> out{};
  for (int k = 0; k < 6; ++k)
    for (int c = 0; c < 5; ++c) {
      std::vector<int> internal, boundary;
      for (int k2 = 0; k2 < 6; ++k2) {
        if (k2 == k) continue;
        bool same = true;
        for (int x = 0; x < 5; ++x)
          if (x != c && !(T[k][x] == T[k2][x])) same = false;
        if (same) internal.push_back(k2 + 1);
      }
      for (int f = 1; f <= 6; ++f) {
        bool all = true;
        for (int x = 0; x < 5; ++x)
          if (x != c && !facet_contains(f, T[k][x])) all = false;
        if (all) boundary.push_back(f);
      }
      if (internal.size() + boundary.size() != 1)
        throw Error(ErrorKind::AuditFailed, "face " + std::to_string(c) + " of t" + std::to_string(k + 1) +
                                                " is not uniquely internal or boundary");
      out[k][c] = internal.empty() ? SimplexFace{false, boundary[0]} : SimplexFace{true, internal[0]};
    }
  return out;
}

std::array<std::array<SimplexFace, 5>, 6> faces_from_table() {
  std::istringstream in{std::string(data_file("simplex_faces.txt"))};
  std::array<std::array<SimplexFace, 5>, 6> out{};
  std::vector<char> seen(6, 0);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    auto bad = [&] { return Error(ErrorKind::ParseError, "simplex_faces.txt: bad row", n); };
    if (name.size() != 2 || name[0] != 't' || name[1] < '1' || name[1] > '6') throw bad();
    int k = name[1] - '1';
    if (seen[k]) throw bad();
    seen[k] = 1;
    for (int c = 0; c < 5; ++c) {
      std::string tok;
      if (!(ls >> tok) || tok.size() != 2 || (tok[0] != 't' && tok[0] != 'F') || tok[1] < '1' || tok[1] > '6') throw bad();
      out[k][c] = SimplexFace{tok[0] == 't', tok[1] - '0'};
    }
    std::string extra;
    if (ls >> extra) throw bad();
  }
  if (std::count(seen.begin(), seen.end(), 1) != 6) throw Error(ErrorKind::ParseError, "simplex_faces.txt: missing rows");
  return out;
}

}  // namespace

const std::array<std::array<SimplexFace, 5>, 6>& simplex_faces() {
  static const auto faces = [] {
    auto geo = faces_from_geometry();
    auto tab = faces_from_table();
    for (int k = 0; k < 6; ++k)
      for (int c = 0; c < 5; ++c)
        if (!(geo[k][c] == tab[k][c]))
          throw Error(ErrorKind::AuditFailed,
                      "face table disagrees with geometry at t" + std::to_string(k + 1) + ", color " + std::to_string(c));
    return geo;
  }();
  return faces;
}

bool is_valid(const CharacteristicFunction& l) {
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      std::vector<Z2Vector> rows;
      for (int f : facets_at({i, j})) rows.push_back(l.lambda[f - 1]);
      if (rows.size() != 4 || gf2_rank(rows) != 4) return false;
    }
  return true;
}

std::string describe(const CharacteristicFunction& l) {
  std::string s;
  for (int f = 0; f < 6; ++f) {
    if (f) s += ' ';
    s += "F" + std::to_string(f + 1) + "=(";
    for (int k = 0; k < 4; ++k) s += std::string(k ? "," : "") + (((l.lambda[f] >> k) & 1) ? "1" : "0");
    s += ')';
  }
  return s;
}

const std::vector<CharacteristicFunction>& standard_characteristic_functions() {
  static const std::vector<CharacteristicFunction> list = [] {
    const Z2Vector e1 = vec(1, 0, 0, 0), e2 = vec(0, 1, 0, 0), e3 = vec(0, 0, 1, 0), e4 = vec(0, 0, 0, 1);
    const std::array<std::pair<Z2Vector, Z2Vector>, 7> tail{{
        {vec(1, 1, 0, 0), vec(0, 0, 1, 1)},
        {vec(1, 1, 0, 0), vec(1, 1, 1, 1)},
        {vec(1, 1, 0, 0), vec(1, 0, 1, 1)},
        {vec(1, 1, 0, 0), vec(0, 1, 1, 1)},
        {vec(1, 1, 1, 1), vec(0, 0, 1, 1)},
        {vec(1, 1, 1, 0), vec(0, 0, 1, 1)},
        {vec(1, 1, 0, 1), vec(0, 0, 1, 1)},
    }};
    std::vector<CharacteristicFunction> out;
    for (auto [f5, f6] : tail) out.push_back({{e1, e2, e3, e4, f5, f6}});
    return out;
  }();
  return list;
}

std::vector<CharacteristicFunction> enumerate_characteristic_functions() {
  std::vector<CharacteristicFunction> found;
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      CharacteristicFunction l{{vec(1, 0, 0, 0), vec(0, 1, 0, 0), vec(0, 0, 1, 0), vec(0, 0, 0, 1),
                                static_cast<Z2Vector>(a), static_cast<Z2Vector>(b)}};
      if (is_valid(l)) found.push_back(l);
    }
  const auto& ref = standard_characteristic_functions();
  auto pos = [&](const CharacteristicFunction& l) {
    return std::find(ref.begin(), ref.end(), l) - ref.begin();
  };
  std::stable_sort(found.begin(), found.end(), [&](const auto& x, const auto& y) { return pos(x) < pos(y); });
  return found;
}

bool dj_equivalent(const CharacteristicFunction& l1, const CharacteristicFunction& l2) {
  if (!is_valid(l1) || !is_valid(l2)) return false;
  // F1..F4 meet at (0,0), so their images form a basis in both; theta is fixed by them.
  auto theta = [&](Z2Vector x) -> Z2Vector {
    for (int a = 0; a < 16; ++a) {
      Z2Vector s = 0, t = 0;
      for (int k = 0; k < 4; ++k)
        if ((a >> k) & 1) s ^= l1.lambda[k], t ^= l2.lambda[k];
      if (s == x) return t;
    }
    return 0xff;
  };
  return theta(l1.lambda[4]) == l2.lambda[4] && theta(l1.lambda[5]) == l2.lambda[5];
}

LabeledGem small_cover_gem(const CharacteristicFunction& l) {
  if (!is_valid(l)) throw Error(ErrorKind::InvalidCharacteristicFunction, describe(l));
  const auto& faces = simplex_faces();
  const int V = 96;
  std::vector<std::vector<Vertex>> inv(5, std::vector<Vertex>(V));
  std::vector<std::string> labels(V);
  for (int t = 0; t < 16; ++t) {
    Z2Vector w = vector_at(t);
    for (int j = 1; j <= 6; ++j) {
      Vertex v = t * 6 + (j - 1);
      labels[v] = cover_label(w, j);
      for (int c = 0; c < 5; ++c) {
        SimplexFace f = faces[j - 1][c];
        inv[c][v] = f.internal ? t * 6 + (f.index - 1)
                               : position_of(static_cast<Z2Vector>(w ^ l.lambda[f.index - 1])) * 6 + (j - 1);
      }
    }
  }
  return LabeledGem(ColoredGraph::from_involutions(std::move(inv)), std::move(labels));
}

LabeledGem small_cover_gem(int index) {
  if (index < 1 || index > 7) throw Error(ErrorKind::PreconditionFailed, "cover index must be 1..7");
  return small_cover_gem(standard_characteristic_functions()[index - 1]);
}

CompactForm compact_form_table(int index) {
  std::istringstream in{std::string(data_file("compact_forms.txt"))};
  std::string line;
  int n = 0, current = 0, row = 0;
  CompactForm out;
  bool found = false;
  while (std::getline(in, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "lambda") {
      if (toks.size() != 2) throw Error(ErrorKind::ParseError, "compact_forms.txt: bad header", n);
      current = std::stoi(toks[1]);
      row = 0;
      continue;
    }
    if (toks.size() != 4 || row >= 4 || current == 0) throw Error(ErrorKind::ParseError, "compact_forms.txt: bad row", n);
    if (current == index) {
      for (int k = 0; k < 4; ++k) out.cells[row][k] = parse_z2_word(toks[k]);
      found = row == 3;
    }
    ++row;
  }
  if (!found) throw Error(ErrorKind::MissingData, "no compact form for cover " + std::to_string(index));
  out.index = index;
  std::set<Z2Vector> all;
  for (auto& r : out.cells) all.insert(r.begin(), r.end());
  if (all.size() != 16) throw Error(ErrorKind::AuditFailed, "compact form table repeats a subscript");
  return out;
}

LabeledGem compact_subgraph(const LabeledGem& g) {
  const auto& G = g.graph();
  std::vector<Vertex> id(G.num_vertices(), -1);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < G.num_vertices(); ++v) {
    int j = parse_cover_label(g.label(v)).j;
    if (j >= 2 && j <= 5) {
      id[v] = static_cast<Vertex>(labels.size());
      labels.push_back(g.label(v));
    }
  }
  const std::array<Color, 4> keep{0, 1, 3, 4};
  std::vector<std::vector<Vertex>> inv(4, std::vector<Vertex>(labels.size()));
  for (Vertex v = 0; v < G.num_vertices(); ++v) {
    if (id[v] < 0) continue;
    for (int c = 0; c < 4; ++c) {
      Vertex w = G.neighbor(keep[c], v);
      if (id[w] < 0) throw Error(ErrorKind::AuditFailed, "S is not closed under color " + std::to_string(keep[c]));
      inv[c][id[v]] = id[w];
    }
  }
  return LabeledGem(ColoredGraph::from_involutions(std::move(inv)), std::move(labels));
}

CompactForm compact_form(const LabeledGem& g, int index) {
  CompactForm cf = compact_form_table(index);
  LabeledGem S = compact_subgraph(g);
  if (S.num_vertices() != 64)
    throw Error(ErrorKind::AuditFailed, "S has " + std::to_string(S.num_vertices()) + " vertices, expected 64");
  auto check = [&](ColorSet colors, bool rows, const char* what) {
    std::set<std::set<Z2Vector>> want;
    for (int a = 0; a < 4; ++a) {
      std::set<Z2Vector> s;
      for (int b = 0; b < 4; ++b) s.insert(rows ? cf.cells[a][b] : cf.cells[b][a]);
      want.insert(s);
    }
    auto lab = restrict(S.graph(), colors);
    std::vector<std::set<Z2Vector>> words(lab.count);
    std::vector<int> size(lab.count, 0);
    for (Vertex v = 0; v < S.num_vertices(); ++v) {
      words[lab.id[v]].insert(parse_cover_label(S.label(v)).w);
      ++size[lab.id[v]];
    }
    std::set<std::set<Z2Vector>> got(words.begin(), words.end());
    if (std::any_of(size.begin(), size.end(), [](int s) { return s != 8; }))
      throw Error(ErrorKind::AuditFailed, std::string(what) + "-cycle of S with length other than 8");
    if (got != want)
      throw Error(ErrorKind::AuditFailed, std::string(what) + "-cycles of S disagree with the compact form table for cover " +
                                              std::to_string(index));
  };
  check(ColorSet{0, 1}, true, "{0,1}");
  check(ColorSet{2, 3}, false, "{3,4}");
  return cf;
}

SmallCoverReduction reduce_to_crystallization(const LabeledGem& g, const CompactForm& cf) {
  SmallCoverReduction r{g, {g.num_vertices()}};
  auto step = [&](const std::vector<Vertex>& lambda, Color c, std::set<int> images, const std::string& what) {
    for (Vertex u : lambda)
      if (!images.count(parse_cover_label(r.gem.label(r.gem.graph().neighbor(c, u))).j))
        throw Error(ErrorKind::AuditFailed, what + ": unexpected image of " + r.gem.label(u));
    r.gem = glue_onto(r.gem, lambda, c);
    r.trace.push_back(r.gem.num_vertices());
  };
  const Z2Vector zero = 0;
  step(component_of(r.gem.graph(), r.gem.at(cover_label(zero, 1)), ColorSet{0, 4}), 2, {2}, "first glue");
  step(component_of(r.gem.graph(), r.gem.at(cover_label(zero, 6)), ColorSet{0, 4}), 2, {5}, "second glue");

  std::vector<std::string> row;
  for (int b = 0; b < 4; ++b)
    for (int j : {2, 4}) row.push_back(cover_label(cf.cells[3][b], j));
  auto recomputed_row = unique_applicable(r.gem, ColorSet{0, 1}, 3, "row glue");
  if (recomputed_row != std::set<std::string>(row.begin(), row.end()))
    throw Error(ErrorKind::AuditFailed, "fourth row of the compact form is not the applicable row glue");
  step(find_all(r.gem, row), 3, {3, 5}, "row glue");

  std::vector<std::string> col;
  for (int a = 0; a < 4; ++a)
    for (int j : {2, 3}) {
      auto l = cover_label(cf.cells[a][2], j);
      if (r.gem.find(l) >= 0) col.push_back(l);
    }
  auto recomputed_col = unique_applicable(r.gem, ColorSet{3, 4}, 1, "column glue");
  if (recomputed_col != std::set<std::string>(col.begin(), col.end()))
    throw Error(ErrorKind::AuditFailed, "third column of the compact form is not the applicable column glue");
  step(find_all(r.gem, col), 1, {4, 5}, "column glue");

  if (r.gem.num_vertices() != 52 || !is_contracted(r.gem.graph()).contracted)
    throw Error(ErrorKind::AuditFailed, "reduction did not end in a 52-vertex crystallization");
  return r;
}

SmallCoverReduction small_cover_crystallization(int index) {
  LabeledGem g = small_cover_gem(index);
  return reduce_to_crystallization(g, compact_form(g, index));
}

std::vector<std::vector<int>> classify_covers(CanonMode mode) {
  std::vector<std::pair<CanonicalSignature, std::vector<int>>> classes;
  for (int i = 1; i <= 7; ++i) {
    auto sig = canonical_signature(small_cover_crystallization(i).gem.graph(), mode);
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return c.first == sig; });
    if (it == classes.end())
      classes.push_back({sig, {i}});
    else
      it->second.push_back(i);
  }
  std::vector<std::vector<int>> out;
  for (auto& c : classes) out.push_back(std::move(c.second));
  return out;
}

}  // namespace gem
