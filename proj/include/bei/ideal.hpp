#pragma once

#include <string>
#include <vector>

#include "bei/field.hpp"
#include "bei/graph.hpp"
#include "bei/poly.hpp"

namespace bei {

enum class Provenance {
  EdgeBinomials,
  InitialMonomials,
  ConstructedP,
  ConstructedQ,
  ConstructedPPlusQ,
  User,
};

std::string to_string(Provenance p);

/// Generators of an ideal of S = F_p[x_1..x_n, y_1..y_n].
class IdealBasis {
 public:
  /// Zero generators are rejected with InputError.
  IdealBasis(int num_vertices, PrimeField field, Provenance provenance, std::vector<Poly> gens);

  int num_vertices() const { return num_vertices_; }
  int num_variables() const { return 2 * num_vertices_; }
  const PrimeField& field() const { return field_; }
  Provenance provenance() const { return provenance_; }
  const std::vector<Poly>& gens() const { return gens_; }

  bool all_monomial() const;
  bool all_squarefree_monomial() const;

 private:
  int num_vertices_;
  PrimeField field_;
  Provenance provenance_;
  std::vector<Poly> gens_;
};

/// x_i y_j - x_j y_i for every edge {i,j}, i < j.
Poly edge_binomial(int i, int j, int num_vertices, const PrimeField& field);

/// J_G. Throws InputError if g has an isolated vertex.
IdealBasis edge_binomials(const SimpleGraph& g, const PrimeField& field = PrimeField());

/// (x_i y_j : {i,j} in E, i < j). Only valid when g is presented in a closed
/// labeling; otherwise throws PreconditionError (use buchberger instead).
IdealBasis initial_edge_monomials(const SimpleGraph& g, const PrimeField& field = PrimeField());

/// Bipartite graph on x_1..x_n (vertices 1..n) and y_1..y_n (vertices n+1..2n)
/// with an edge {x_i, y_j} for every edge i < j. Same precondition as above.
BipartiteGraph bipartite_initial_graph(const SimpleGraph& g);

struct PQDecomposition {
  IdealBasis p;
  IdealBasis q;
  IdealBasis p_plus_q;
};

/// P = J_{K_n}; Q = (x_i, y_i : a <= i <= b) + J_{K_[1,a-1]} + J_{K_[b+1,n]};
/// P+Q = (x_i, y_i : a <= i <= b) + J_{K_([n] \ [a,b])}. Requires 1 < a <= b < n.
PQDecomposition construct_P_Q(int n, int a, int b, const PrimeField& field = PrimeField());

/// One generator per line.
std::string format_ideal(const IdealBasis& ideal);
/// Parses one generator per line ('#' comments and blank lines allowed).
IdealBasis parse_ideal(std::string_view text, int num_vertices, const PrimeField& field,
                       Provenance provenance = Provenance::User);

}  // namespace bei
