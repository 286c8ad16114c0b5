#include "gem/torus_cube.hpp"

#include <algorithm>
#include <numeric>

#include "gem/errors.hpp"

namespace gem {

namespace {

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Lexicographic rank of a permutation of 1..m.
std::size_t rank_of(const std::vector<int>& p) {
  const int m = static_cast<int>(p.size());
  std::size_t r = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j)
      if (p[j] < p[i]) ++smaller;
    r += static_cast<std::size_t>(smaller) * factorial(m - 1 - i);
  }
  return r;
}

std::string perm_label(const std::vector<int>& p) {
  std::string s;
  const bool sep = p.size() > 9;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sep && i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

}  // namespace

LabeledGem torus_gem(int n, std::uint64_t budget) {
  if (n < 1) throw Error(ErrorKind::PreconditionFailed, "torus dimension must be at least 1");
  if (n > 19 || factorial(n + 1) > budget)
    throw Error(ErrorKind::BudgetExceeded,
                "(n+1)! vertices for n = " + std::to_string(n) + " exceeds budget " + std::to_string(budget));
  const int m = n + 1;
  const auto V = static_cast<std::size_t>(factorial(m));
  std::vector<std::vector<Vertex>> inv(m, std::vector<Vertex>(V));
  std::vector<std::string> labels;
  labels.reserve(V);
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 1);
  std::size_t idx = 0;
  do {
    labels.push_back(perm_label(p));
    for (int k = 1; k <= n; ++k) {
      auto q = p;
      std::swap(q[k - 1], q[k]);
      inv[k][idx] = static_cast<Vertex>(rank_of(q));
    }
    auto q = p;
    std::swap(q[0], q[n]);
    inv[0][idx] = static_cast<Vertex>(rank_of(q));
    ++idx;
  } while (std::next_permutation(p.begin(), p.end()));
  return LabeledGem(ColoredGraph::from_involutions(std::move(inv)), std::move(labels));
}

std::vector<int> torus_zero_walk(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size()) - 1;
  auto q = perm;
  if (n == 1) {
    std::swap(q[0], q[1]);
    return q;
  }
  for (int k = n; k >= 1; --k) std::swap(q[k - 1], q[k]);
  for (int k = 2; k <= n; ++k) std::swap(q[k - 1], q[k]);
  return q;
}

CyclicPermutation torus_stated_permutation(int n) {
  if (n < 2) throw Error(ErrorKind::PreconditionFailed, "stated permutation needs n >= 2");
  CyclicPermutation e;
  for (int c = 0; c <= n; c += 2) e.push_back(c);
  if (n % 2 == 0) {
    for (int c = 1; c < n; c += 2) e.push_back(c);
  } else {
    e.push_back(1);
    for (int c = n; c >= 3; c -= 2) e.push_back(c);
  }
  return e;
}

std::int64_t torus_genus_formula(int n) {
  if (n < 4 || n > 19) throw Error(ErrorKind::PreconditionFailed, "genus formula is stated for n >= 4");
  return 1 + static_cast<std::int64_t>(factorial(n + 1)) * (n - 3) / 8;
}

TorusCycleAudit audit_cycle_lengths(const LabeledGem& g) {
  const auto& G = g.graph();
  const int nc = G.n_colors();
  TorusCycleAudit a;
  a.lengths_4_or_6 = true;
  for (Color i = 0; i < nc; ++i)
    for (Color j = i + 1; j < nc; ++j)
      for (int l : bicolored_cycle_lengths(G, i, j))
        if (l != 4 && l != 6) a.lengths_4_or_6 = false;
  if (nc >= 3) {
    auto e = torus_stated_permutation(nc - 1);
    a.stated_pairs_4 = true;
    for (int t = 0; t < nc; ++t)
      for (int l : bicolored_cycle_lengths(G, e[t], e[(t + 1) % nc]))
        if (l != 4) a.stated_pairs_4 = false;
  }
  return a;
}

}  // namespace gem
