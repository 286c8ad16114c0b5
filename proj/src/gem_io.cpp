#include "gem/gem_io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "gem/errors.hpp"

namespace gem {

namespace {

struct Line {
  std::string_view text;
  int number;
};

class Scanner {
 public:
  explicit Scanner(Line l) : s_(l.text), line_(l.number) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  int line() const { return line_; }

  [[noreturn]] void fail(const std::string& msg) const { throw Error(ErrorKind::ParseError, msg, line_, column()); }

  std::string_view word() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != ':') ++pos_;
    return s_.substr(b, pos_ - b);
  }
  long long number(const char* what) {
    skip_ws();
    long long v = 0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc() || p == s_.data() + pos_) fail(std::string("expected ") + what);
    pos_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string_view rest() {
    skip_ws();
    std::string_view r = s_.substr(pos_);
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.remove_suffix(1);
    pos_ = s_.size();
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int n = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    ++n;
    start = end + 1;
    if (auto h = l.find('#'); h != std::string_view::npos) l = l.substr(0, h);
    bool blank = true;
    for (char ch : l)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank) out.push_back({l, n});
  }
  return out;
}

}  // namespace

LabeledGem parse_gem(std::string_view text) {
  auto lines = content_lines(text);
  std::size_t at = 0;
  auto header = [&](std::string_view key, const char* what) -> long long {
    if (at >= lines.size()) throw Error(ErrorKind::ParseError, std::string("missing '") + std::string(key) + "' line");
    Scanner s(lines[at]);
    if (s.word() != key) s.fail(std::string("expected '") + std::string(key) + "'");
    long long v = s.number(what);
    if (!s.at_end()) s.fail("trailing text");
    ++at;
    return v;
  };
  long long version = header("gem", "format version");
  if (version != 1) throw Error(ErrorKind::ParseError, "unsupported format version " + std::to_string(version), lines[0].number);
  long long nc = header("colors", "color count");
  if (nc < 2 || nc > kMaxColors)
    throw Error(ErrorKind::ColorOutOfRange, "color count " + std::to_string(nc), lines[at - 1].number);
  long long V = header("vertices", "vertex count");
  if (V < 2) throw Error(ErrorKind::VertexCountMismatch, "need at least 2 vertices", lines[at - 1].number);
  if (V % 2) throw Error(ErrorKind::OddVertexCount, std::to_string(V) + " vertices", lines[at - 1].number);
  if (V > (1 << 26)) throw Error(ErrorKind::ParseError, "vertex count too large", lines[at - 1].number);

  std::vector<std::string> labels = default_labels(static_cast<int>(V));
  std::vector<char> labeled(V, 0);
  std::vector<std::vector<Pair>> pairs(nc);
  std::vector<int> color_line(nc, 0);
  std::vector<Vertex> mate(V);

  for (; at < lines.size(); ++at) {
    Scanner s(lines[at]);
    std::string_view key = s.word();
    if (key == "label") {
      long long id = s.number("vertex id");
      if (id < 0 || id >= V) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(id), s.line(), s.column());
      std::string_view l = s.rest();
      if (l.empty()) s.fail("empty label");
      if (labeled[id]) throw Error(ErrorKind::DuplicateLabel, "vertex " + std::to_string(id) + " labeled twice", s.line());
      labeled[id] = 1;
      labels[id] = std::string(l);
    } else if (key == "c") {
      long long c = s.number("color");
      if (c < 0 || c >= nc) throw Error(ErrorKind::ColorOutOfRange, "color " + std::to_string(c), s.line(), s.column());
      if (color_line[c]) s.fail("color " + std::to_string(c) + " already given at line " + std::to_string(color_line[c]));
      color_line[c] = s.line();
      s.expect(':');
      std::fill(mate.begin(), mate.end(), -1);
      while (!s.at_end()) {
        int col = s.column();
        long long a = s.number("vertex");
        s.expect('-');
        long long b = s.number("vertex");
        if (a < 0 || a >= V || b < 0 || b >= V)
          throw Error(ErrorKind::VertexOutOfRange, "pair " + std::to_string(a) + "-" + std::to_string(b), s.line(), col);
        if (a == b) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(a), s.line(), col);
        for (long long x : {a, b})
          if (mate[x] != -1)
            throw Error(ErrorKind::DuplicateVertexInColor,
                        "vertex " + std::to_string(x) + " appears twice in color " + std::to_string(c), s.line(), col);
        mate[a] = static_cast<Vertex>(b);
        mate[b] = static_cast<Vertex>(a);
        pairs[c].emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      }
      if (static_cast<long long>(pairs[c].size()) * 2 != V)
        throw Error(ErrorKind::VertexCountMismatch,
                    "color " + std::to_string(c) + " covers " + std::to_string(pairs[c].size() * 2) + " of " +
                        std::to_string(V) + " vertices",
                    s.line());
    } else {
      s.fail("unknown directive '" + std::string(key) + "'");
    }
  }
  for (long long c = 0; c < nc; ++c)
    if (!color_line[c]) throw Error(ErrorKind::ParseError, "no edge line for color " + std::to_string(c));
  auto g = ColoredGraph::from_pairs(static_cast<int>(nc), static_cast<int>(V), pairs);
  try {
    return LabeledGem(std::move(g), std::move(labels));
  } catch (const Error& e) {
    throw Error(e.kind(), e.message());
  }
}

std::string render_gem(const LabeledGem& g) {
  const auto& G = g.graph();
  std::ostringstream out;
  out << "gem 1\ncolors " << G.n_colors() << "\nvertices " << G.num_vertices() << '\n';
  bool custom = false;
  for (Vertex v = 0; v < G.num_vertices(); ++v)
    if (g.label(v) != std::to_string(v)) custom = true;
  if (custom)
    for (Vertex v = 0; v < G.num_vertices(); ++v) out << "label " << v << ' ' << g.label(v) << '\n';
  for (Color c = 0; c < G.n_colors(); ++c) {
    out << "c " << c << ':';
    for (auto [a, b] : G.edges(c)) out << ' ' << a << '-' << b;
    out << '\n';
  }
  return out.str();
}

namespace {

constexpr std::array<const char*, 8> kPalette{"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string export_dot(const LabeledGem& g) {
  const auto& G = g.graph();
  std::ostringstream out;
  out << "graph gem {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < G.num_vertices(); ++v) out << "  " << quoted(g.label(v)) << ";\n";
  for (Color c = 0; c < G.n_colors(); ++c)
    for (auto [a, b] : G.edges(c))
      out << "  " << quoted(g.label(a)) << " -- " << quoted(g.label(b)) << " [color=" << kPalette[c % kPalette.size()]
          << ", label=\"" << c << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string export_gluings(const LabeledGem& g) {
  const auto& G = g.graph();
  std::ostringstream out;
  out << "simplex";
  for (Color c = 0; c < G.n_colors(); ++c) out << "\tc" << c;
  out << '\n';
  for (Vertex v = 0; v < G.num_vertices(); ++v) {
    out << v;
    for (Color c = 0; c < G.n_colors(); ++c) out << '\t' << G.neighbor(c, v);
    out << '\n';
  }
  return out.str();
}

}  // namespace gem
