#include "bei/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "bei/errors.hpp"

namespace bei {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_vertex_count(int n) {
  if (n < 0 || n > SimpleGraph::kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                     std::to_string(SimpleGraph::kMaxVertices));
  }
}

// Bron-Kerbosch with Tomita pivoting over bitmasks.
void bron_kerbosch(std::span<const std::uint64_t> adj, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (std::uint64_t px = p | x; px != 0; px &= px - 1) {
    int u = std::countr_zero(px);
    int c = std::popcount(p & adj[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (std::uint64_t cand = p & ~adj[pivot]; cand != 0; cand &= cand - 1) {
    int v = std::countr_zero(cand);
    std::uint64_t vb = std::uint64_t{1} << v;
    bron_kerbosch(adj, r | vb, p & adj[v], x & adj[v], out);
    p &= ~vb;
    x |= vb;
  }
}

void count_cliques(std::span<const std::uint64_t> adj, std::uint64_t candidates, int size,
                   std::vector<std::uint64_t>& counts) {
  for (std::uint64_t c = candidates; c != 0; c &= c - 1) {
    int v = std::countr_zero(c);
    if (counts.size() <= static_cast<std::size_t>(size)) counts.resize(size + 1, 0);
    ++counts[size];
    // Extend only by larger vertices so each clique is produced once.
    std::uint64_t higher = ~((std::uint64_t{2} << v) - 1);
    if (v == 63) higher = 0;
    count_cliques(adj, candidates & adj[v] & higher, size + 1, counts);
  }
}

}  // namespace

SimpleGraph::SimpleGraph(int n) : n_(n) {
  check_vertex_count(n);
  adj_.assign(n, 0);
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (adj_[u - 1] & bit(v)) {
      throw InputError("duplicate edge {" + std::to_string(std::min(u, v)) + "," +
                       std::to_string(std::max(u, v)) + "}");
    }
    adj_[u - 1] |= bit(v);
    adj_[v - 1] |= bit(u);
  }
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto m : adj_) twice += std::popcount(m);
  return twice / 2;
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return (adj_[u - 1] & bit(v)) != 0;
}

int SimpleGraph::degree(int v) const { return std::popcount(adj_[v - 1]); }

bool SimpleGraph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](std::uint64_t m) { return m == 0; });
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n_; ++u) {
    for (std::uint64_t m = adj_[u - 1] & ~low_mask(u); m != 0; m &= m - 1) {
      out.emplace_back(u, std::countr_zero(m) + 1);
    }
  }
  return out;
}

std::uint64_t SimpleGraph::vertex_mask() const { return low_mask(n_); }

SimpleGraph SimpleGraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InputError("relabeling has wrong length");
  std::vector<bool> seen(n_ + 1, false);
  for (int p : perm) {
    if (p < 1 || p > n_ || seen[p]) throw InputError("relabeling is not a bijection on 1..n");
    seen[p] = true;
  }
  std::vector<Edge> mapped;
  for (auto [u, v] : edges()) mapped.emplace_back(perm[u - 1], perm[v - 1]);
  return SimpleGraph(n_, mapped);
}

SimpleGraph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return SimpleGraph(n, e);
}

SimpleGraph path_graph(int n) {
  std::vector<Edge> e;
  for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
  return SimpleGraph(n, e);
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
  e.emplace_back(1, n);
  return SimpleGraph(n, e);
}

SimpleGraph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int v = 2; v <= leaves + 1; ++v) e.emplace_back(1, v);
  return SimpleGraph(leaves + 1, e);
}

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + g.n(), v + g.n());
  return SimpleGraph(g.n() + h.n(), e);
}

SimpleGraph complement(const SimpleGraph& g) {
  std::vector<Edge> e;
  for (int u = 1; u <= g.n(); ++u)
    for (int v = u + 1; v <= g.n(); ++v)
      if (!g.has_edge(u, v)) e.emplace_back(u, v);
  return SimpleGraph(g.n(), e);
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, const VertexSet& s) {
  std::vector<int> verts = s;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts) {
    if (v < 1 || v > g.n()) {
      throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.n()));
    }
  }
  std::vector<int> index(g.n() + 1, 0);
  for (std::size_t k = 0; k < verts.size(); ++k) index[verts[k]] = static_cast<int>(k) + 1;
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    if (index[u] && index[v]) e.emplace_back(index[u], index[v]);
  return {SimpleGraph(static_cast<int>(verts.size()), e), verts};
}

std::vector<std::uint64_t> adjacency_masks(const SimpleGraph& g) {
  std::vector<std::uint64_t> adj(g.n());
  for (int v = 1; v <= g.n(); ++v) adj[v - 1] = g.neighbor_mask(v);
  return adj;
}

int component_count(std::span<const std::uint64_t> adjacency, std::uint64_t mask) {
  int count = 0;
  std::uint64_t left = mask;
  while (left != 0) {
    std::uint64_t frontier = left & (~left + 1);
    std::uint64_t comp = frontier;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adjacency[std::countr_zero(f)];
      next &= mask & ~comp;
      comp |= next;
      frontier = next;
    }
    left &= ~comp;
    ++count;
  }
  return count;
}

int complement_component_count(std::span<const std::uint64_t> adjacency, std::uint64_t mask) {
  int count = 0;
  std::uint64_t left = mask;
  while (left != 0) {
    std::uint64_t frontier = left & (~left + 1);
    std::uint64_t comp = frontier;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
        int v = std::countr_zero(f);
        next |= ~adjacency[v] & ~(std::uint64_t{1} << v);
      }
      next &= mask & ~comp;
      comp |= next;
      frontier = next;
    }
    left &= ~comp;
    ++count;
  }
  return count;
}

std::vector<VertexSet> connected_components(const SimpleGraph& g) {
  auto adj = adjacency_masks(g);
  std::vector<VertexSet> out;
  std::uint64_t left = g.vertex_mask();
  while (left != 0) {
    std::uint64_t comp = left & (~left + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(mask_to_vertices(comp));
    left &= ~comp;
  }
  return out;
}

CliqueComplex maximal_cliques(const SimpleGraph& g) {
  auto adj = adjacency_masks(g);
  std::vector<std::uint64_t> found;
  if (g.n() > 0) bron_kerbosch(adj, 0, g.vertex_mask(), 0, found);
  CliqueComplex cc;
  for (auto m : found) cc.facets.push_back(mask_to_vertices(m));
  std::sort(cc.facets.begin(), cc.facets.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return cc;
}

FVector f_vector(const SimpleGraph& g) {
  auto adj = adjacency_masks(g);
  std::vector<std::uint64_t> counts;
  count_cliques(adj, g.vertex_mask(), 0, counts);
  return {counts};
}

bool is_clique(const SimpleGraph& g, std::uint64_t mask) {
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    int v = std::countr_zero(m) + 1;
    if ((mask & ~bit(v) & ~g.neighbor_mask(v)) != 0) return false;
  }
  return true;
}

bool is_complete(const SimpleGraph& g) { return is_clique(g, g.vertex_mask()); }

int longest_induced_path_length(const SimpleGraph& g) {
  if (g.n() > 24) throw InputError("induced path search is limited to 24 vertices");
  auto adj = adjacency_masks(g);
  int best = 0;
  const std::uint64_t total = std::uint64_t{1} << g.n();
  for (std::uint64_t s = 1; s < total; ++s) {
    int size = std::popcount(s);
    if (size - 1 <= best) continue;
    // G_S is a path iff it is connected, has |S|-1 edges and maximum degree <= 2.
    int twice_edges = 0;
    bool ok = true;
    for (std::uint64_t m = s; m != 0; m &= m - 1) {
      int d = std::popcount(adj[std::countr_zero(m)] & s);
      if (d > 2) {
        ok = false;
        break;
      }
      twice_edges += d;
    }
    if (!ok || twice_edges != 2 * (size - 1)) continue;
    if (component_count(adj, s) == 1) best = size - 1;
  }
  return best;
}

VertexSet mask_to_vertices(std::uint64_t mask) {
  VertexSet out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask) + 1);
  return out;
}

std::uint64_t vertices_to_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= bit(v);
  return m;
}

}  // namespace bei
