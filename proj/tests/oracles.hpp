#pragma once

// Brute-force reference computations for the tests. Each one works from the
// definitions on explicit edge sets and deliberately shares no code with the
// library beyond the SimpleGraph container.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "bei/graph.hpp"

namespace oracle {

using bei::Edge;
using bei::SimpleGraph;

inline bool adjacent(const SimpleGraph& g, int u, int v) {
  for (auto [a, b] : g.edges())
    if ((a == u && b == v) || (a == v && b == u)) return true;
  return false;
}

inline std::vector<std::vector<bool>> matrix(const SimpleGraph& g) {
  std::vector<std::vector<bool>> m(g.n() + 1, std::vector<bool>(g.n() + 1, false));
  for (auto [a, b] : g.edges()) m[a][b] = m[b][a] = true;
  return m;
}

inline std::vector<int> members(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; v < 32; ++v)
    if (mask >> v & 1) out.push_back(v + 1);
  return out;
}

inline bool subset_is_clique(const std::vector<std::vector<bool>>& m, const std::vector<int>& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!m[s[a]][s[b]]) return false;
  return true;
}

/// counts[k] = number of cliques with k+1 vertices, by checking every subset.
inline std::vector<std::uint64_t> clique_counts(const SimpleGraph& g) {
  auto m = matrix(g);
  std::vector<std::uint64_t> counts;
  for (std::uint32_t s = 1; s < (1u << g.n()); ++s) {
    auto vs = members(s);
    if (!subset_is_clique(m, vs)) continue;
    if (counts.size() < vs.size()) counts.resize(vs.size(), 0);
    ++counts[vs.size() - 1];
  }
  return counts;
}

/// Maximal cliques, each sorted, the list sorted.
inline std::set<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
  auto m = matrix(g);
  std::set<std::vector<int>> out;
  for (std::uint32_t s = 1; s < (1u << g.n()); ++s) {
    auto vs = members(s);
    if (!subset_is_clique(m, vs)) continue;
    bool maximal = true;
    for (int v = 1; v <= g.n() && maximal; ++v) {
      if (s >> (v - 1) & 1) continue;
      auto bigger = vs;
      bigger.push_back(v);
      if (subset_is_clique(m, bigger)) maximal = false;
    }
    if (maximal) out.insert(vs);
  }
  return out;
}

/// Triple criterion for the labeling `order` (order[k] = vertex placed at position k+1).
inline bool closed_under(const std::vector<std::vector<bool>>& m, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i)
    for (int k = i + 2; k < n; ++k)
      if (m[order[i]][order[k]])
        for (int j = i + 1; j < k; ++j)
          if (!m[order[i]][order[j]] || !m[order[j]][order[k]]) return false;
  return true;
}

inline bool has_closed_labeling(const SimpleGraph& g) {
  auto m = matrix(g);
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 1);
  do {
    if (closed_under(m, order)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

/// Longest induced path (in edges), over all subsets and all orderings of them.
inline int longest_induced_path(const SimpleGraph& g) {
  auto m = matrix(g);
  int best = 0;
  for (std::uint32_t s = 1; s < (1u << g.n()); ++s) {
    auto vs = members(s);
    const int k = static_cast<int>(vs.size());
    if (k - 1 <= best) continue;
    std::sort(vs.begin(), vs.end());
    do {
      bool induced_path = true;
      for (int a = 0; a < k && induced_path; ++a)
        for (int b = a + 1; b < k && induced_path; ++b)
          if (m[vs[a]][vs[b]] != (b == a + 1)) induced_path = false;
      if (induced_path) {
        best = k - 1;
        break;
      }
    } while (std::next_permutation(vs.begin(), vs.end()));
  }
  return best;
}

/// Connected components of the complement of g restricted to `vs`, by union-find.
inline int complement_components(const std::vector<std::vector<bool>>& m, const std::vector<int>& vs) {
  std::vector<int> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!m[vs[a]][vs[b]]) parent[find(static_cast<int>(a))] = find(static_cast<int>(b));
  int c = 0;
  for (std::size_t a = 0; a < vs.size(); ++a)
    if (find(static_cast<int>(a)) == static_cast<int>(a)) ++c;
  return c;
}

/// Isomorphism test by trying every bijection.
inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  auto ma = matrix(a), mb = matrix(b);
  std::vector<int> p(a.n());
  std::iota(p.begin(), p.end(), 1);
  do {
    bool ok = true;
    for (int u = 1; u <= a.n() && ok; ++u)
      for (int v = u + 1; v <= a.n() && ok; ++v)
        if (ma[u][v] != mb[p[u - 1]][p[v - 1]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Every labeled graph on n vertices (edge subsets of K_n, in mask order).
inline std::vector<SimpleGraph> labeled_graphs(int n) {
  std::vector<Edge> all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
  std::vector<SimpleGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask >> k & 1) e.push_back(all[k]);
    out.emplace_back(n, e);
  }
  return out;
}

inline SimpleGraph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return SimpleGraph(n, e);
}

/// Betti numbers of S/(f_1..f_r) for a regular sequence of degrees d_1..d_r:
/// beta_{i,j} = number of i-subsets whose degrees sum to j.
inline std::map<std::pair<int, int>, std::uint64_t> complete_intersection(const std::vector<int>& degrees) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  const int r = static_cast<int>(degrees.size());
  for (std::uint32_t s = 0; s < (1u << r); ++s) {
    int i = 0, j = 0;
    for (int k = 0; k < r; ++k)
      if (s >> k & 1) ++i, j += degrees[k];
    ++out[{i, j}];
  }
  return out;
}

}  // namespace oracle
