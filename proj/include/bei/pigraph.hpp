#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

/// perm[v-1] is the new label of original vertex v.
struct ClosedLabeling {
  std::vector<int> perm;
  friend bool operator==(const ClosedLabeling&, const ClosedLabeling&) = default;
};

struct Interval {
  int a = 0;
  int b = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Facets of the clique complex under a closed labeling, by increasing left endpoint.
struct FacetIntervals {
  std::vector<Interval> intervals;
};

struct DisjointTwoCliques {
  int m = 0;
  int p = 0;
  friend bool operator==(const DisjointTwoCliques&, const DisjointTwoCliques&) = default;
};
struct TwoOverlappingIntervalCliques {
  int a = 0;
  int b = 0;
  friend bool operator==(const TwoOverlappingIntervalCliques&,
                         const TwoOverlappingIntervalCliques&) = default;
};
struct NotRegTwo {
  friend bool operator==(const NotRegTwo&, const NotRegTwo&) = default;
};
using Reg2Class = std::variant<DisjointTwoCliques, TwoOverlappingIntervalCliques, NotRegTwo>;

std::string to_string(const Reg2Class& c);
std::string to_string(const FacetIntervals& f);
inline bool is_reg_two(const Reg2Class& c) { return !std::holds_alternative<NotRegTwo>(c); }

/// Triple criterion: after relabeling, {i,k} in E implies {i,j},{j,k} in E for i<j<k.
/// Throws InputError if perm is not a bijection on 1..n.
bool validate_closed_labeling(const SimpleGraph& g, std::span<const int> perm);
/// The triple criterion for the labeling g is presented in.
bool is_closed_as_labeled(const SimpleGraph& g);

/// Closed labeling via consecutive facet orderings. Components are labeled in
/// order of their smallest original vertex; among the candidate labelings the
/// lexicographically smallest permutation is returned.
std::optional<ClosedLabeling> find_closed_labeling(const SimpleGraph& g);
/// Brute force over all n! permutations (lexicographically first hit). n <= 10.
std::optional<ClosedLabeling> find_closed_labeling_exhaustive(const SimpleGraph& g);

/// Throws PreconditionError if the labeling is not closed.
FacetIntervals facet_intervals(const SimpleGraph& g, const ClosedLabeling& labeling);

/// Throws PreconditionError for non-PI graphs or graphs with isolated vertices.
Reg2Class classify_reg2(const SimpleGraph& g);

/// Minimum upper-triangle adjacency code over all vertex orders that list
/// vertices by non-increasing degree. Equal codes iff isomorphic. n <= 11.
std::uint64_t canonical_code(const SimpleGraph& g);
SimpleGraph canonical_form(const SimpleGraph& g);

/// One representative per isomorphism class of PI graphs on n vertices with no
/// isolated vertex, each presented in its closed labeling. 1 <= n <= 8.
std::vector<SimpleGraph> enumerate_pi_graphs(int n);

/// One representative (canonical form) per isomorphism class of graphs on n
/// vertices without isolated vertices, PI or not. 1 <= n <= 6. PI classes are
/// presented in their closed labeling.
std::vector<SimpleGraph> enumerate_graphs(int n);

}  // namespace bei
