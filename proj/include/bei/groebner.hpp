#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bei/ideal.hpp"
#include "bei/poly.hpp"

namespace bei {

/// Reduced Gröbner basis under lex with x_1 > ... > x_n > y_1 > ... > y_n:
/// monic, inter-reduced, sorted by decreasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(int num_vertices, PrimeField field, std::vector<Poly> gens)
      : num_vertices_(num_vertices), field_(field), gens_(std::move(gens)) {}

  int num_vertices() const { return num_vertices_; }
  int num_variables() const { return 2 * num_vertices_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Poly>& gens() const { return gens_; }
  std::vector<Monomial> leading_monomials() const;
  /// The basis as plain generators (provenance User).
  IdealBasis as_ideal() const;

 private:
  int num_vertices_;
  PrimeField field_;
  std::vector<Poly> gens_;
};

/// Normal form of f: no term is divisible by a leading monomial of basis.
Poly poly_reduce(const Poly& f, std::span<const Poly> basis, const PrimeField& field);

Poly s_polynomial(const Poly& f, const Poly& g, const PrimeField& field);

/// Buchberger with the normal selection strategy (smallest lcm degree, then
/// smallest lcm in lex) plus the coprime and chain criteria.
GroebnerBasis buchberger(const IdealBasis& basis);

/// True iff every S-pair of the generators reduces to zero against them.
bool is_groebner(const IdealBasis& basis);

/// Monomial ideal of leading terms (its minimal generators).
IdealBasis initial_ideal(const GroebnerBasis& gb);

/// Drops non-minimal monomials; result sorted decreasing.
std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens);

/// Degree-d monomials outside the leading-term ideal, decreasing in lex.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int degree);

/// dim (S/J)_d for d = 0..max_degree, counted on standard monomials.
std::vector<std::uint64_t> hilbert_function(const GroebnerBasis& gb, int max_degree);

/// dim (S/J)_d for d = 0..max_degree computed without a Gröbner basis, as the
/// number of degree-d monomials minus the rank of {m * g} over all generators g.
std::vector<std::uint64_t> hilbert_function_by_linear_algebra(const IdealBasis& ideal,
                                                              int max_degree);

}  // namespace bei
