#pragma once

#include <cstdint>
#include <vector>

#include "bei/betti_table.hpp"
#include "bei/graph.hpp"

namespace bei {

/// Linear strands are returned as v[i] = beta_{i,i+1}, i >= 0, with trailing
/// zeros removed (so the strand of a zero-strand table is empty).
using Strand = std::vector<std::uint64_t>;

/// i * f_i(Delta(G)). Throws InputError if g has an isolated vertex.
Strand linear_strand_clique(const SimpleGraph& g);

/// Strand of R/I(H), R the polynomial ring on V(H): for each i the sum over
/// (i+1)-subsets S of (number of components of the complement of H_S) - 1.
Strand linear_strand_rvt(const SimpleGraph& h);

/// Counts the (i+1)-subsets S meeting both sides with H_S complete bipartite.
/// Throws InputError if an edge joins two vertices of the same side.
Strand linear_strand_bipartite(const BipartiteGraph& h);

Strand strand_from_table(const BettiTable& t);

/// The pairing between the subsets counted in the strand of ini(J_G) and the
/// pairs (j, C) with 1 <= j <= i and C an (i+1)-clique of G.
struct StrandPair {
  int j = 0;
  VertexSet clique;
  friend bool operator==(const StrandPair&, const StrandPair&) = default;
};

struct StrandWitness {
  int i = 0;
  /// Vertex masks of the initial bipartite graph: bit k-1 is x_k, bit n+k-1 is y_k.
  std::vector<std::uint64_t> subsets;
  std::vector<StrandPair> pairs;
  std::vector<std::size_t> subset_to_pair;
  std::vector<std::size_t> pair_to_subset;
};

/// S -> (|S cap X|, indices of S).
StrandPair strand_pair_of_subset(int n, std::uint64_t subset);
/// (j, {k_1 < ... < k_{i+1}}) -> {x_{k_1}..x_{k_j}} u {y_{k_{j+1}}..y_{k_{i+1}}}.
std::uint64_t strand_subset_of_pair(int n, const StrandPair& pair);

/// Both sides enumerated independently and matched through the two maps above.
/// Throws PreconditionError unless g is presented in a closed labeling, and
/// std::logic_error if a map lands outside the other side.
StrandWitness strand_bijection_witness(const SimpleGraph& g, int i);

}  // namespace bei
