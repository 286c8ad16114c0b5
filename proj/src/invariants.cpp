#include "gem/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "gem/errors.hpp"

namespace gem {

std::string HalfInteger::str() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

CyclicPermutation canonical_cyclic(std::vector<Color> eps, int n_colors) {
  if (static_cast<int>(eps.size()) != n_colors)
    throw Error(ErrorKind::PermutationColorMismatch,
                "permutation has " + std::to_string(eps.size()) + " entries, graph has " + std::to_string(n_colors) + " colors");
  std::vector<bool> seen(n_colors, false);
  for (Color c : eps) {
    if (c < 0 || c >= n_colors || seen[c])
      throw Error(ErrorKind::PermutationColorMismatch, "not a permutation of 0.." + std::to_string(n_colors - 1));
    seen[c] = true;
  }
  auto zero = std::find(eps.begin(), eps.end(), 0);
  std::rotate(eps.begin(), zero, eps.end());
  if (n_colors > 2 && eps[1] > eps.back()) std::reverse(eps.begin() + 1, eps.end());
  return eps;
}

std::vector<CyclicPermutation> canonical_cyclic_permutations(int n_colors) {
  std::vector<CyclicPermutation> out;
  std::vector<Color> tail(n_colors - 1);
  std::iota(tail.begin(), tail.end(), 1);
  do {
    if (tail.size() >= 2 && tail.front() > tail.back()) continue;
    CyclicPermutation e{0};
    e.insert(e.end(), tail.begin(), tail.end());
    out.push_back(std::move(e));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

std::vector<std::vector<int>> pair_counts(const ColoredGraph& g) {
  const int nc = g.n_colors();
  std::vector<std::vector<int>> m(nc, std::vector<int>(nc, 0));
  for (Color i = 0; i < nc; ++i)
    for (Color j = i + 1; j < nc; ++j) m[i][j] = m[j][i] = component_count(g, ColorSet{i, j});
  return m;
}

namespace {

GenusReport report_from(const std::vector<std::vector<int>>& pc, const ColoredGraph& g, CyclicPermutation eps) {
  const int nc = g.n_colors();
  const long long n = nc - 1;
  GenusReport r;
  long long sum = 0;
  for (int i = 0; i < nc; ++i) {
    int c = pc[eps[i]][eps[(i + 1) % nc]];
    r.pair_counts.push_back(c);
    sum += c;
  }
  // chi_eps = sum + (1-n) V / 2; V is even.
  r.chi_eps = sum + (1 - n) * (g.num_vertices() / 2);
  r.rho = HalfInteger::from_twice(2 - r.chi_eps);
  r.eps = std::move(eps);
  return r;
}

}  // namespace

GenusReport genus_for(const ColoredGraph& g, const std::vector<Color>& eps, bool closed_manifold) {
  CyclicPermutation e = canonical_cyclic(eps, g.n_colors());
  GenusReport r = report_from(pair_counts(g), g, std::move(e));
  if (closed_manifold && (!r.rho.is_integer() || r.rho.twice < 0))
    throw Error(ErrorKind::ResultInvalid, "rho = " + r.rho.str() + " is not a non-negative integer");
  return r;
}

RegularGenus regular_genus(const ColoredGraph& g) {
  auto pc = pair_counts(g);
  RegularGenus out;
  for (auto& eps : canonical_cyclic_permutations(g.n_colors())) out.reports.push_back(report_from(pc, g, eps));
  out.min_rho = out.reports.front().rho;
  for (const auto& r : out.reports) out.min_rho = std::min(out.min_rho, r.rho);
  for (const auto& r : out.reports)
    if (r.rho == out.min_rho) out.argmin.push_back(r.eps);
  return out;
}

long long euler_characteristic(const ColoredGraph& g) {
  auto N = face_counts(g);
  long long chi = 0;
  for (std::size_t k = 0; k < N.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * N[k];
  return chi;
}

long long genus_lower_bound(long long chi, long long rank) {
  if (rank < 0) throw Error(ErrorKind::PreconditionFailed, "rank must be non-negative");
  return 2 * chi + 5 * rank - 4;
}

WeakSemiSimpleReport is_weak_semi_simple(const ColoredGraph& g, const std::vector<Color>& eps, long long rank) {
  if (g.n_colors() != 5)
    throw Error(ErrorKind::DimensionUnsupported, "weak semi-simplicity is defined for 4-dimensional gems only");
  canonical_cyclic(eps, 5);  // validation only
  WeakSemiSimpleReport r;
  r.holds = true;
  for (int i = 0; i < 5; ++i) {
    std::array<Color, 3> t{eps[i], eps[(i + 2) % 5], eps[(i + 4) % 5]};
    int k = component_count(g, ColorSet{t[0], t[1], t[2]});
    r.triples.push_back(t);
    r.counts.push_back(k);
    if (k != rank + 1) r.holds = false;
  }
  return r;
}

std::vector<int> bicolored_cycle_lengths(const ColoredGraph& g, Color i, Color j) {
  if (i < 0 || i >= g.n_colors() || j < 0 || j >= g.n_colors())
    throw Error(ErrorKind::ColorOutOfRange, "colors " + std::to_string(i) + "," + std::to_string(j));
  if (i == j) throw Error(ErrorKind::PreconditionFailed, "bicolored cycles need two distinct colors");
  const int V = g.num_vertices();
  std::vector<bool> seen(V, false);
  std::vector<int> out;
  for (Vertex s = 0; s < V; ++s) {
    if (seen[s]) continue;
    int len = 0;
    Vertex v = s;
    Color c = i;
    do {
      seen[v] = true;
      v = g.neighbor(c, v);
      c = (c == i) ? j : i;
      ++len;
    } while (v != s || c != i);
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gem
