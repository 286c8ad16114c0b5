// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gem/constructions.hpp"
#include "gem/errors.hpp"
#include "gem/invariants.hpp"
#include "gem/iso_canon.hpp"
#include "gem/small_covers.hpp"
#include "gem/torus_cube.hpp"
#include "support/properties.hpp"

using namespace gem;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

template <class T>
std::string str(const std::vector<T>& v) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ')';
  return s.str();
}

bool in_pairs(Color i, Color j, const std::vector<std::pair<Color, Color>>& ps) {
  return std::find(ps.begin(), ps.end(), std::pair{std::min(i, j), std::max(i, j)}) != ps.end();
}

const std::vector<std::pair<Color, Color>> kFivePairs{{0, 2}, {2, 4}, {1, 4}, {1, 3}, {0, 3}};

void crit1(Check& c) {
  auto g = g1_prime();
  const auto& G = g.graph();
  c.require(G.num_vertices() == 40, "vertices " + std::to_string(G.num_vertices()));
  auto pc = pair_counts(G);
  for (Color i = 0; i < 5; ++i)
    for (Color j = i + 1; j < 5; ++j) {
      int want = in_pairs(i, j, kFivePairs) ? 10 : 8;
      c.require(pc[i][j] == want, "g" + std::to_string(i) + std::to_string(j) + " = " + std::to_string(pc[i][j]));
    }
  auto rg = regular_genus(G);
  c.require(rg.reports.size() == 12, "permutations " + std::to_string(rg.reports.size()));
  c.require(rg.min_rho == HalfInteger{12}, "regular genus " + rg.min_rho.str());
  c.require(std::find(rg.argmin.begin(), rg.argmin.end(), CyclicPermutation{0, 2, 4, 1, 3}) != rg.argmin.end(),
            "(0,2,4,1,3) not a minimizer");
}

void crit2(Check& c) {
  auto g = g2_prime();
  const auto& G = g.graph();
  c.require(G.num_vertices() == 120, "vertices " + std::to_string(G.num_vertices()));
  for (auto [i, j] : kFivePairs) {
    auto l = bicolored_cycle_lengths(G, i, j);
    c.require(l.size() == 30 && std::all_of(l.begin(), l.end(), [](int x) { return x == 4; }),
              "{" + std::to_string(i) + "," + std::to_string(j) + "} census");
  }
  auto r = genus_for(G, {0, 2, 4, 1, 3});
  c.require(r.rho == HalfInteger{32}, "rho(0,2,4,1,3) = " + r.rho.str());
  auto rg = regular_genus(G);
  c.require(rg.min_rho == HalfInteger{32}, "regular genus " + rg.min_rho.str());
}

void crit3(Check& c) {
  auto fs = enumerate_characteristic_functions();
  c.require(fs.size() == 7, "count " + std::to_string(fs.size()));
  c.require(fs == standard_characteristic_functions(), "values of lambda(F5), lambda(F6) differ from the listed seven");
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = a + 1; b < fs.size(); ++b)
      c.require(!dj_equivalent(fs[a], fs[b]), "lambda" + std::to_string(a + 1) + " ~ lambda" + std::to_string(b + 1));
}

void crit4(Check& c) {
  for (int i = 1; i <= 7; ++i) {
    const std::string tag = "cover " + std::to_string(i) + ": ";
    auto g = small_cover_gem(i);
    const auto& G = g.graph();
    c.require(G.num_vertices() == 96, tag + "vertices");
    c.require(is_contracted(G).complement_counts == std::vector<int>{1, 2, 3, 2, 1},
              tag + "complement counts " + str(is_contracted(G).complement_counts));
    for (auto [a, b] : std::vector<std::pair<Color, Color>>{{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}}) {
      auto l = bicolored_cycle_lengths(G, a, b);
      c.require(l.size() == 24 && std::all_of(l.begin(), l.end(), [](int x) { return x == 4; }),
                tag + "{" + std::to_string(a) + "," + std::to_string(b) + "} census");
    }
    c.require(euler_characteristic(G) == 1, tag + "chi of the 96-vertex gem");
    c.require(!is_bipartite(G), tag + "96-vertex gem bipartite");

    auto red = reduce_to_crystallization(g, compact_form(g, i));
    c.require(red.trace == std::vector<int>{96, 88, 80, 64, 52}, tag + "trace " + str(red.trace));
    const auto& R = red.gem.graph();
    c.require(is_contracted(R).contracted, tag + "reduced gem not contracted");
    auto at = genus_for(R, {0, 3, 2, 1, 4});
    c.require(at.rho == HalfInteger{16}, tag + "rho(0,3,2,1,4) = " + at.rho.str());
    auto rg = regular_genus(R);
    c.require(rg.min_rho == HalfInteger{16}, tag + "regular genus " + rg.min_rho.str());
    c.require(euler_characteristic(R) == 1, tag + "chi");
    c.require(!is_bipartite(R), tag + "bipartite");
    c.require(is_weak_semi_simple(R, {0, 3, 2, 1, 4}, 2).holds, tag + "not weak semi-simple");

    auto pc = pair_counts(R);
    c.require(pc[2][3] == 13 && pc[1][2] == 12, tag + "g23/g12");
    for (auto [a, b] : std::vector<std::pair<Color, Color>>{{0, 3}, {0, 4}, {1, 4}})
      c.require(pc[a][b] == 13, tag + "g" + std::to_string(a) + std::to_string(b));
    auto l23 = bicolored_cycle_lengths(R, 2, 3), l12 = bicolored_cycle_lengths(R, 1, 2);
    std::vector<int> want23 = std::set<int>{1, 2, 5}.count(i) ? std::vector<int>(13, 4)
                                                               : std::vector<int>{2, 2, 4, 4, 4, 4, 4, 4, 4, 4, 4, 6, 6};
    std::vector<int> want12 = std::set<int>{1, 3, 6}.count(i) ? std::vector<int>{4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 8}
                                                               : std::vector<int>{2, 4, 4, 4, 4, 4, 4, 4, 4, 6, 6, 6};
    c.require(l23 == want23, tag + "{2,3} census " + str(l23));
    c.require(l12 == want12, tag + "{1,2} census " + str(l12));
  }
}

void crit5(Check& c) {
  std::vector<LabeledGem> r;
  for (int i = 1; i <= 7; ++i) r.push_back(small_cover_crystallization(i).gem);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}, {4, 7}})
    c.require(isomorphic(r[a - 1].graph(), r[b - 1].graph()).has_value(),
              std::to_string(a) + " and " + std::to_string(b) + " not isomorphic");
  std::set<std::string> sigs;
  for (const auto& g : r) sigs.insert(canonical_signature(g.graph()).bytes);
  c.require(sigs.size() == 4, std::to_string(sigs.size()) + " signature classes");
  auto classes = classify_covers();
  c.require(classes == std::vector<std::vector<int>>{{1}, {2, 5}, {3, 6}, {4, 7}}, "classes differ");
}

void crit6(Check& c) {
  auto t4 = torus_gem(4);
  auto g2 = g2_prime();
  c.require(isomorphic(t4.graph(), g2.graph(), true).has_value(), "torus(4) not isomorphic to g2prime");
  c.require(canonical_signature(t4.graph(), CanonMode::UpToColorPermutation) ==
                canonical_signature(g2.graph(), CanonMode::UpToColorPermutation),
            "color-free signatures differ");
  auto t5 = torus_gem(5);
  c.require(t5.num_vertices() == 720, "torus(5) vertices");
  c.require(audit_cycle_lengths(t5).lengths_4_or_6, "torus(5) has a cycle of length other than 4 or 6");
  auto r = genus_for(t5.graph(), {0, 2, 4, 1, 5, 3});
  c.require(r.rho == HalfInteger{2 * 181}, "rho = " + r.rho.str());
  c.require(torus_genus_formula(5) == 181, "formula");
}

void crit7(Check& c) {
  auto s = s2xs1_standard();
  auto rs = regular_genus(s.graph());
  c.require(rs.min_rho == HalfInteger{2}, "s2xs1 regular genus " + rs.min_rho.str());
  auto t = t3_standard();
  auto rt = regular_genus(t.graph());
  c.require(rt.min_rho == HalfInteger{6}, "t3 regular genus " + rt.min_rho.str());
  int six = 0, four = 0;
  for (Color i = 0; i < 4; ++i)
    for (Color j = i + 1; j < 4; ++j) {
      auto l = bicolored_cycle_lengths(t.graph(), i, j);
      if (l == std::vector<int>(4, 6)) ++six;
      if (l == std::vector<int>(6, 4)) ++four;
    }
  c.require(six == 4 && four == 2, "t3 cycle census");
  c.require(product_gem(s).num_vertices() == 64, "product of s2xs1");
  c.require(product_gem(t).num_vertices() == 192, "product of t3");
}

void crit8(Check& c) {
  using namespace gem::testkit;
  for (auto fn : std::vector<std::function<PropertyResult()>>{
           [] { return dipole_insertions(200); }, [] { return component_counts_vs_flood_fill(); },
           [] { return isomorphism_vs_brute_force(); }, [] { return signature_law(50); },
           [] { return combined_move_vs_dipoles(); }, [] { return singleton_glue_vs_dipole(); }}) {
    auto r = fn();
    c.require(r.ok(), r.name + ": " + (r.failures.empty() ? "no checks ran" : r.failures.front()));
    c.notes.push_back(r.name + " [" + std::to_string(r.checks) + " checks]");
  }
}

void crit9(Check& c) {
  struct Family {
    std::string name;
    LabeledGem gem;
    long long rank;
  };
  std::vector<Family> fams{{"g1prime", g1_prime(), 2}, {"g2prime", g2_prime(), 4}};
  for (int i = 1; i <= 7; ++i) fams.push_back({"cover" + std::to_string(i), small_cover_crystallization(i).gem, 2});
  c.require(genus_lower_bound(0, 2) == 6 && genus_lower_bound(0, 4) == 16 && genus_lower_bound(1, 2) == 8,
            "bound arithmetic");
  for (const auto& f : fams) {
    long long chi = euler_characteristic(f.gem.graph());
    long long b = genus_lower_bound(chi, f.rank);
    auto rg = regular_genus(f.gem.graph());
    c.require(rg.min_rho == HalfInteger{2 * b},
              f.name + ": bound " + std::to_string(b) + " vs regular genus " + rg.min_rho.str());
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  void (*fn)(Check&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "40-vertex S2xS1xS1 crystallization: g-vector and regular genus 6", 1, crit1},
      {2, "120-vertex T4 crystallization: 4-cycle census and regular genus 16", 5, crit2},
      {3, "seven characteristic functions, pairwise D-J inequivalent", 1, crit3},
      {4, "small covers: 96-vertex gems, reduction to 52 vertices, genus 8, weak semi-simple", 10, crit4},
      {5, "reduced small covers fall into 4 isomorphism classes", 10, crit5},
      {6, "cube torus: n=4 matches the 120-vertex gem, n=5 genus 181", 10, crit6},
      {7, "base crystallizations and product vertex counts", 1, crit7},
      {8, "property suites", 120, crit8},
      {9, "lower bound 2chi+5m-4 attained by all three families", 10, crit9},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.fn(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > cr.limit_s) c.require(false, "took longer than " + std::to_string(cr.limit_s) + " s");
    if (!c.ok) ++failed;
    std::printf("criterion %d: %s  %s  (%.3f s)\n", cr.id, c.ok ? "PASS" : "FAIL", cr.title, s);
    for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
