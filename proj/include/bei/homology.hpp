#pragma once

#include <cstdint>
#include <vector>

#include "bei/field.hpp"
#include "bei/graph.hpp"

namespace bei {

/// Simplicial complex on vertices 1..num_vertices given by its facets.
/// An empty facet list with is_void == false is the complex {emptyset};
/// with is_void == true there are no faces at all.
struct SimplicialComplexRepr {
  int num_vertices = 0;
  std::vector<VertexSet> facets;
  bool is_void = false;
};

/// ranks[k + 1] = dim H~_k over F_p for k = -1 .. dim. Empty for the void complex.
std::vector<std::uint64_t> simplicial_reduced_homology(const SimplicialComplexRepr& c,
                                                       const PrimeField& field);

/// Same, for a complex given as its full list of faces (bitmasks, bit v-1 for
/// vertex v). The list must be closed under taking subsets and contain the
/// empty face unless the complex is void.
std::vector<std::uint64_t> reduced_homology_of_faces(const std::vector<std::uint64_t>& faces,
                                                     const PrimeField& field);

/// counts[k + 1] = number of k-dimensional faces, k = -1 .. dim.
std::vector<std::uint64_t> face_counts(const std::vector<std::uint64_t>& faces);

/// All faces of the complex generated by the given facets.
std::vector<std::uint64_t> faces_of(const SimplicialComplexRepr& c);

/// Rank of a dense matrix over F_p (entries already reduced mod p).
std::size_t dense_rank(std::vector<std::vector<std::uint32_t>> rows, const PrimeField& field);

}  // namespace bei
