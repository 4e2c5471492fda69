#include "bei/strands.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "bei/errors.hpp"
#include "bei/ideal.hpp"
#include "bei/pigraph.hpp"

namespace bei {

namespace {

Strand trimmed(Strand s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

template <class Count>
Strand sum_over_subsets(int n, Count&& count) {
  if (n > 24) throw InputError("subset enumeration is limited to 24 vertices");
  Strand out(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < end; ++s) out[std::popcount(s) - 1] += count(s);
  return trimmed(std::move(out));
}

}  // namespace

Strand linear_strand_clique(const SimpleGraph& g) {
  if (g.has_isolated_vertex()) throw InputError("graph has an isolated vertex");
  auto f = f_vector(g).counts;
  Strand out(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = i * f[i];
  return trimmed(std::move(out));
}

Strand linear_strand_rvt(const SimpleGraph& h) {
  const auto adj = adjacency_masks(h);
  return sum_over_subsets(h.n(), [&](std::uint64_t s) -> std::uint64_t {
    return complement_component_count(adj, s) - 1;
  });
}

Strand linear_strand_bipartite(const BipartiteGraph& h) {
  const auto adj = adjacency_masks(h.graph);
  const std::uint64_t a = h.side_a & h.graph.vertex_mask();
  const std::uint64_t b = h.graph.vertex_mask() & ~a;
  for (int v = 1; v <= h.graph.n(); ++v) {
    const std::uint64_t same = (a >> (v - 1) & 1) ? a : b;
    if (adj[v - 1] & same) throw InputError("an edge joins two vertices of the same side");
  }
  return sum_over_subsets(h.graph.n(), [&](std::uint64_t s) -> std::uint64_t {
    const std::uint64_t sa = s & a, sb = s & b;
    if (!sa || !sb) return 0;
    for (std::uint64_t rest = sa; rest; rest &= rest - 1)
      if ((adj[std::countr_zero(rest)] & sb) != sb) return 0;
    return 1;
  });
}

Strand strand_from_table(const BettiTable& t) {
  Strand out;
  for (const auto& [k, v] : t.entries) {
    if (k.second != k.first + 1) continue;
    if (out.size() <= static_cast<std::size_t>(k.first)) out.resize(k.first + 1, 0);
    out[k.first] = v;
  }
  return trimmed(std::move(out));
}

StrandPair strand_pair_of_subset(int n, std::uint64_t subset) {
  StrandPair p;
  const std::uint64_t low = (std::uint64_t{1} << n) - 1;
  p.j = std::popcount(subset & low);
  for (int k = 1; k <= n; ++k)
    if ((subset >> (k - 1) & 1) || (subset >> (n + k - 1) & 1)) p.clique.push_back(k);
  return p;
}

std::uint64_t strand_subset_of_pair(int n, const StrandPair& pair) {
  std::uint64_t s = 0;
  for (std::size_t r = 0; r < pair.clique.size(); ++r) {
    const int k = pair.clique[r];
    const int bit = static_cast<int>(r) < pair.j ? k - 1 : n + k - 1;
    s |= std::uint64_t{1} << bit;
  }
  return s;
}

StrandWitness strand_bijection_witness(const SimpleGraph& g, int i) {
  if (!is_closed_as_labeled(g)) throw PreconditionError("the graph is not closed as labeled");
  const int n = g.n();
  StrandWitness w;
  w.i = i;
  if (i < 1) return w;

  const BipartiteGraph h = bipartite_initial_graph(g);
  const auto adj = adjacency_masks(h.graph);
  const std::uint64_t end = std::uint64_t{1} << (2 * n);
  for (std::uint64_t s = 1; s < end; ++s) {
    if (std::popcount(s) != i + 1) continue;
    if (complement_component_count(adj, s) == 2) w.subsets.push_back(s);
  }

  const std::uint64_t vend = std::uint64_t{1} << n;
  std::vector<VertexSet> cliques;
  for (std::uint64_t c = 1; c < vend; ++c)
    if (std::popcount(c) == i + 1 && is_clique(g, c)) cliques.push_back(mask_to_vertices(c));
  for (int j = 1; j <= i; ++j)
    for (const auto& c : cliques) w.pairs.push_back({j, c});

  std::map<std::uint64_t, std::size_t> subset_index;
  for (std::size_t k = 0; k < w.subsets.size(); ++k) subset_index[w.subsets[k]] = k;
  std::map<std::pair<int, VertexSet>, std::size_t> pair_index;
  for (std::size_t k = 0; k < w.pairs.size(); ++k)
    pair_index[{w.pairs[k].j, w.pairs[k].clique}] = k;

  for (auto s : w.subsets) {
    StrandPair p = strand_pair_of_subset(n, s);
    auto it = pair_index.find({p.j, p.clique});
    if (it == pair_index.end()) throw std::logic_error("subset maps outside the clique pairs");
    w.subset_to_pair.push_back(it->second);
  }
  for (const auto& p : w.pairs) {
    auto it = subset_index.find(strand_subset_of_pair(n, p));
    if (it == subset_index.end()) throw std::logic_error("clique pair maps outside the subsets");
    w.pair_to_subset.push_back(it->second);
  }
  return w;
}

}  // namespace bei
