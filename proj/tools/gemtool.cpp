// gemtool: build, inspect, transform and compare gems.
//
// Exit codes: 0 success, 1 validation or precondition failure, 2 parse error
// (malformed gem or move-script file, or bad command line).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gem/constructions.hpp"
#include "gem/errors.hpp"
#include "gem/gem_io.hpp"
#include "gem/invariants.hpp"
#include "gem/iso_canon.hpp"
#include "gem/moves.hpp"
#include "gem/small_covers.hpp"
#include "gem/torus_cube.hpp"

using json = nlohmann::ordered_json;
using namespace gem;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

LabeledGem load(const std::string& path) {
  try {
    return parse_gem(read_text(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.message(), e.line(), e.column());
  }
}

std::vector<int> parse_int_list(std::string s, const char* what) {
  for (char& ch : s)
    if (ch == '(' || ch == ')' || ch == ',') ch = ' ';
  std::istringstream in(s);
  std::vector<int> out;
  for (std::string tok; in >> tok;) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, std::string("bad ") + what + " '" + s + "'");
    }
  }
  return out;
}

std::string eps_str(const CyclicPermutation& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

json report_json(const GenusReport& r) {
  return {{"perm", r.eps}, {"pair_counts", r.pair_counts}, {"chi_eps", r.chi_eps}, {"rho", r.rho.str()}};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot write " + out_path);
  out << text;
}

// Options shared by several subcommands.
struct Opts {
  bool json = false;
  std::string name, file, file2, out, perm, pair, script, format = "gem";
  int n = 0, lambda = 0;
  long long chi = 0, rank = 0;
  bool all = false, color_perm = false;
};

int cmd_build(const Opts& o) {
  LabeledGem g = [&] {
    if (o.name == "product-gem") {
      if (o.file.empty()) throw Error(ErrorKind::PreconditionFailed, "product-gem needs a base gem file");
      return product_gem(load(o.file));
    }
    if (o.name == "torus-cube") return torus_gem(o.n);
    if (o.name == "small-cover") return small_cover_gem(o.lambda);
    if (o.name == "small-cover-reduced") return small_cover_crystallization(o.lambda).gem;
    return build_named(o.name);
  }();
  if (o.json) {
    json j{{"name", o.name},
           {"colors", g.graph().n_colors()},
           {"vertices", g.num_vertices()},
           {"gem", render_gem(g)}};
    emit(j.dump(2) + "\n", o.out);
  } else {
    emit(render_gem(g), o.out);
  }
  return 0;
}

int cmd_check(const Opts& o) {
  auto g = load(o.file);
  const auto& G = g.graph();
  auto c = is_contracted(G);
  bool bip = is_bipartite(G);
  long long chi = euler_characteristic(G);
  if (o.json) {
    std::cout << json{{"colors", G.n_colors()},
                      {"vertices", G.num_vertices()},
                      {"contracted", c.contracted},
                      {"complement_counts", c.complement_counts},
                      {"bipartite", bip},
                      {"chi", chi}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "colors " << G.n_colors() << "\nvertices " << G.num_vertices() << "\ncontracted "
              << (c.contracted ? "yes" : "no") << "\ncomplement_counts";
    for (int x : c.complement_counts) std::cout << ' ' << x;
    std::cout << "\nbipartite " << (bip ? "yes" : "no") << "\nchi " << chi << '\n';
  }
  return 0;
}

int cmd_genus(const Opts& o) {
  auto gem_file = load(o.file);
  const auto& G = gem_file.graph();
  if (!o.perm.empty()) {
    auto r = genus_for(G, parse_int_list(o.perm, "permutation"));
    if (o.json) {
      std::cout << report_json(r).dump(2) << '\n';
    } else {
      std::cout << "perm " << eps_str(r.eps) << "\npair_counts";
      for (int x : r.pair_counts) std::cout << ' ' << x;
      std::cout << "\nchi_eps " << r.chi_eps << "\nrho " << r.rho.str() << '\n';
    }
    return 0;
  }
  auto rg = regular_genus(G);
  if (o.json) {
    json j{{"rho", rg.min_rho.str()}, {"argmin", rg.argmin}};
    if (o.all) {
      j["reports"] = json::array();
      for (const auto& r : rg.reports) j["reports"].push_back(report_json(r));
    }
    std::cout << j.dump(2) << '\n';
  } else {
    if (o.all)
      for (const auto& r : rg.reports) std::cout << eps_str(r.eps) << ' ' << r.rho.str() << '\n';
    std::cout << "rho " << rg.min_rho.str() << "\nargmin";
    for (const auto& e : rg.argmin) std::cout << ' ' << eps_str(e);
    std::cout << '\n';
  }
  return 0;
}

int cmd_cycles(const Opts& o) {
  auto gem_file = load(o.file);
  const auto& G = gem_file.graph();
  auto p = parse_int_list(o.pair, "color pair");
  if (p.size() != 2 || p[0] == p[1]) throw Error(ErrorKind::PreconditionFailed, "--pair needs two distinct colors");
  for (int c : p)
    if (c < 0 || c >= G.n_colors()) throw Error(ErrorKind::ColorOutOfRange, "color " + std::to_string(c));
  auto lens = bicolored_cycle_lengths(G, p[0], p[1]);
  if (o.json) {
    std::cout << json{{"pair", p}, {"count", lens.size()}, {"lengths", lens}}.dump(2) << '\n';
  } else {
    std::cout << "count " << lens.size() << "\nlengths";
    for (int l : lens) std::cout << ' ' << l;
    std::cout << '\n';
  }
  return 0;
}

int cmd_chi(const Opts& o) {
  auto gem_file = load(o.file);
  const auto& G = gem_file.graph();
  auto f = face_counts(G);
  long long chi = euler_characteristic(G);
  if (o.json) {
    std::cout << json{{"face_counts", f}, {"chi", chi}}.dump(2) << '\n';
  } else {
    std::cout << "face_counts";
    for (auto x : f) std::cout << ' ' << x;
    std::cout << "\nchi " << chi << '\n';
  }
  return 0;
}

int cmd_bound(const Opts& o) {
  long long b = genus_lower_bound(o.chi, o.rank);
  if (o.json)
    std::cout << json{{"chi", o.chi}, {"rank", o.rank}, {"bound", b}}.dump(2) << '\n';
  else
    std::cout << b << '\n';
  return 0;
}

int cmd_wss(const Opts& o) {
  auto gem_file = load(o.file);
  const auto& G = gem_file.graph();
  auto r = is_weak_semi_simple(G, parse_int_list(o.perm, "permutation"), o.rank);
  if (o.json) {
    json t = json::array();
    for (std::size_t i = 0; i < r.triples.size(); ++i)
      t.push_back({{"colors", r.triples[i]}, {"components", r.counts[i]}});
    std::cout << json{{"holds", r.holds}, {"target", o.rank + 1}, {"triples", t}}.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < r.triples.size(); ++i)
      std::cout << "g{" << r.triples[i][0] << ',' << r.triples[i][1] << ',' << r.triples[i][2] << "} " << r.counts[i]
                << '\n';
    std::cout << "weak_semi_simple " << (r.holds ? "yes" : "no") << '\n';
  }
  return 0;
}

int cmd_moves(const Opts& o) {
  auto g = load(o.file);
  MoveScript script;
  try {
    script = parse_move_script(read_text(o.script));
  } catch (const Error& e) {
    throw Error(e.kind(), o.script + ": " + e.message(), e.line(), e.column());
  }
  auto r = run_script(g, script);
  if (o.json) {
    emit(json{{"trace", r.trace}, {"vertices", r.gem.num_vertices()}, {"gem", render_gem(r.gem)}}.dump(2) + "\n",
         o.out);
  } else {
    std::string head = "# trace";
    for (int x : r.trace) head += ' ' + std::to_string(x);
    emit(head + '\n' + render_gem(r.gem), o.out);
  }
  return 0;
}

int cmd_iso(const Opts& o) {
  auto a = load(o.file), b = load(o.file2);
  auto w = isomorphic(a.graph(), b.graph(), o.color_perm);
  if (o.json) {
    json j{{"isomorphic", w.has_value()}};
    if (w) {
      json vm = json::object();
      for (Vertex v = 0; v < a.num_vertices(); ++v) vm[a.label(v)] = b.label(w->vertex_map[v]);
      j["color_map"] = w->color_map;
      j["vertex_map"] = vm;
    }
    std::cout << j.dump(2) << '\n';
  } else if (w) {
    std::cout << "isomorphic\ncolor_map";
    for (Color c : w->color_map) std::cout << ' ' << c;
    std::cout << '\n';
    for (Vertex v = 0; v < a.num_vertices(); ++v)
      std::cout << a.label(v) << " -> " << b.label(w->vertex_map[v]) << '\n';
  } else {
    std::cout << "not isomorphic\n";
  }
  return 0;
}

int cmd_canon(const Opts& o) {
  auto gem_file = load(o.file);
  const auto& G = gem_file.graph();
  auto s = canonical_signature(G, o.color_perm ? CanonMode::UpToColorPermutation : CanonMode::FixedColors);
  if (o.json)
    std::cout << json{{"mode", o.color_perm ? "color-perm" : "fixed"}, {"digest", s.digest()}, {"signature", s.bytes}}
                     .dump(2)
              << '\n';
  else
    std::cout << s.digest() << '\n' << s.bytes << '\n';
  return 0;
}

int cmd_export(const Opts& o) {
  auto g = load(o.file);
  if (o.format == "dot")
    emit(export_dot(g), o.out);
  else if (o.format == "gluings")
    emit(export_gluings(g), o.out);
  else
    emit(render_gem(g), o.out);
  return 0;
}

int cmd_classify(const Opts& o) {
  auto classes = classify_covers(o.color_perm ? CanonMode::UpToColorPermutation : CanonMode::FixedColors);
  if (o.json) {
    std::cout << json{{"classes", classes}}.dump(2) << '\n';
  } else {
    for (const auto& c : classes) {
      for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << c[i];
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_enumerate(const Opts& o) {
  auto fs = enumerate_characteristic_functions();
  if (o.json) {
    json a = json::array();
    for (const auto& f : fs) a.push_back(f.lambda);
    std::cout << json{{"count", fs.size()}, {"functions", a}}.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < fs.size(); ++i) std::cout << i + 1 << ' ' << describe(fs[i]) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, inspect and compare gems (edge-colored graphs encoding PL manifolds)"};
  app.require_subcommand(1);
  Opts o;
  app.add_flag("--json", o.json, "Machine-readable output");
  int (*run)(const Opts&) = nullptr;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Opts&)) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&run, fn] { run = fn; });
    return s;
  };

  auto* build = sub("build", "Build a named gem", cmd_build);
  build->add_option("name", o.name, "s2xs1 | t3 | g1prime | g2prime | g1prime-figure | g2prime-figure | "
                                    "product-gem <file> | torus-cube --n N | small-cover --lambda I | "
                                    "small-cover-reduced --lambda I")
      ->required();
  build->add_option("file", o.file, "Base gem for product-gem");
  build->add_option("--n", o.n, "Torus dimension");
  build->add_option("--lambda", o.lambda, "Characteristic function index 1..7");
  build->add_option("-o,--output", o.out, "Output file");

  auto* sc = app.add_subcommand("small-cover", "Small covers over the product of two triangles");
  sc->require_subcommand(1);
  auto* classify = sc->add_subcommand("classify", "Isomorphism classes of the seven reduced gems");
  classify->add_flag("--color-perm", o.color_perm, "Allow a color permutation");
  classify->callback([&] { run = cmd_classify; });
  sc->add_subcommand("enumerate", "List the characteristic functions")->callback([&] { run = cmd_enumerate; });

  sub("check", "Validate a gem file and report basic invariants", cmd_check)->add_option("file", o.file)->required();

  auto* genus = sub("genus", "Regular genus", cmd_genus);
  genus->add_option("file", o.file)->required();
  auto* perm_opt = genus->add_option("--perm", o.perm, "Cyclic permutation, e.g. 0,2,4,1,3");
  genus->add_flag("--all", o.all, "Report every cyclic permutation")->excludes(perm_opt);

  auto* cycles = sub("cycles", "Bi-colored cycle census", cmd_cycles);
  cycles->add_option("file", o.file)->required();
  cycles->add_option("--pair", o.pair, "Colors i,j")->required();

  sub("chi", "Face counts and Euler characteristic", cmd_chi)->add_option("file", o.file)->required();

  auto* bound = sub("bound", "Lower bound 2 chi + 5 m - 4 on the regular genus", cmd_bound);
  bound->add_option("--chi", o.chi)->required();
  bound->add_option("--rank", o.rank)->required();

  auto* wss = sub("wss", "Weak semi-simple test (color triples eps_i, eps_i+2, eps_i+4)", cmd_wss);
  wss->add_option("file", o.file)->required();
  wss->add_option("--perm", o.perm)->required();
  wss->add_option("--rank", o.rank)->required();

  auto* moves = sub("moves", "Apply a move script", cmd_moves);
  moves->add_option("file", o.file)->required();
  moves->add_option("--script", o.script)->required();
  moves->add_option("-o,--output", o.out);

  auto* iso = sub("iso", "Test isomorphism of two gems", cmd_iso);
  iso->add_option("a", o.file)->required();
  iso->add_option("b", o.file2)->required();
  iso->add_flag("--color-perm", o.color_perm, "Allow a color permutation");

  auto* canon = sub("canon", "Canonical signature", cmd_canon);
  canon->add_option("file", o.file)->required();
  canon->add_flag("--color-perm", o.color_perm, "Minimize over color permutations");

  auto* exp = sub("export", "Export as DOT, gluing table or canonical gem text", cmd_export);
  exp->add_option("file", o.file)->required();
  exp->add_option("--format", o.format)->check(CLI::IsMember({"dot", "gluings", "gem"}));
  exp->add_option("-o,--output", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? 2 : 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
