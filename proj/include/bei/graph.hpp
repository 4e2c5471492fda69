#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bei {

using Edge = std::pair<int, int>;
using VertexSet = std::vector<int>;  // 1-based, sorted ascending

/// Undirected loop-free graph on the vertices 1..n.
///
/// Adjacency is stored as one 64-bit mask per vertex (bit v-1 stands for
/// vertex v), so n is limited to kMaxVertices. Instances are immutable once
/// constructed.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 64;

  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  /// Throws InputError on loops, duplicate edges or endpoints outside 1..n.
  SimpleGraph(int n, std::span<const Edge> edges);
  SimpleGraph(int n, std::initializer_list<Edge> edges)
      : SimpleGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int n() const { return n_; }
  std::size_t edge_count() const;
  bool has_edge(int u, int v) const;
  /// Neighbours of v as a bitmask (bit w-1 set iff {v,w} is an edge).
  std::uint64_t neighbor_mask(int v) const { return adj_[v - 1]; }
  int degree(int v) const;
  bool has_isolated_vertex() const;
  /// Edges {u,v} with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::uint64_t vertex_mask() const;

  /// Relabels vertex v as perm[v-1]. perm must be a bijection on 1..n.
  SimpleGraph relabeled(std::span<const int> perm) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// A graph together with a declared bipartition; vertices whose bit is set in
/// side_a form one side, all remaining vertices the other.
struct BipartiteGraph {
  SimpleGraph graph;
  std::uint64_t side_a = 0;
};

struct InducedSubgraph {
  SimpleGraph graph;
  std::vector<int> original;  // original[k-1] = vertex of G relabeled as k
};

/// Maximal cliques of a graph.
struct CliqueComplex {
  std::vector<VertexSet> facets;
};

/// counts[i] = number of cliques with i+1 vertices.
struct FVector {
  std::vector<std::uint64_t> counts;
};

SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
/// K_{1,k} with centre 1.
SimpleGraph star_graph(int leaves);
/// Vertices of h are shifted by g.n().
SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);

SimpleGraph complement(const SimpleGraph& g);
/// Throws InputError if s names a vertex outside 1..n.
InducedSubgraph induced_subgraph(const SimpleGraph& g, const VertexSet& s);
/// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const SimpleGraph& g);
CliqueComplex maximal_cliques(const SimpleGraph& g);
FVector f_vector(const SimpleGraph& g);
/// Number of edges of a longest induced path. Exhaustive; meant for n <= 12.
int longest_induced_path_length(const SimpleGraph& g);

bool is_clique(const SimpleGraph& g, std::uint64_t mask);
bool is_complete(const SimpleGraph& g);

// Bitmask helpers shared by the strand formulas.
int component_count(std::span<const std::uint64_t> adjacency, std::uint64_t mask);
int complement_component_count(std::span<const std::uint64_t> adjacency, std::uint64_t mask);
std::vector<std::uint64_t> adjacency_masks(const SimpleGraph& g);

VertexSet mask_to_vertices(std::uint64_t mask);
std::uint64_t vertices_to_mask(const VertexSet& s);

}  // namespace bei
