#include "bei/ideal.hpp"

#include <sstream>

#include "bei/errors.hpp"
#include "bei/pigraph.hpp"

namespace bei {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::EdgeBinomials: return "edge-binomials";
    case Provenance::InitialMonomials: return "initial-monomials";
    case Provenance::ConstructedP: return "constructed-P";
    case Provenance::ConstructedQ: return "constructed-Q";
    case Provenance::ConstructedPPlusQ: return "constructed-P-plus-Q";
    case Provenance::User: return "user";
  }
  return "unknown";
}

IdealBasis::IdealBasis(int num_vertices, PrimeField field, Provenance provenance,
                       std::vector<Poly> gens)
    : num_vertices_(num_vertices), field_(field), provenance_(provenance), gens_(std::move(gens)) {
  if (num_vertices < 0 || 2 * num_vertices > kMaxVariables) {
    throw InputError("rings with at most " + std::to_string(kMaxVariables / 2) +
                     " vertices are supported");
  }
  for (const auto& g : gens_)
    if (g.is_zero()) throw InputError("ideal generators must be nonzero");
}

bool IdealBasis::all_monomial() const {
  for (const auto& g : gens_)
    if (!g.is_monomial()) return false;
  return true;
}

bool IdealBasis::all_squarefree_monomial() const {
  for (const auto& g : gens_) {
    if (!g.is_monomial()) return false;
    for (auto e : g.leading_monomial().exp)
      if (e > 1) return false;
  }
  return true;
}

Poly edge_binomial(int i, int j, int num_vertices, const PrimeField& field) {
  Monomial a = variable(x_var(i)) * variable(y_var(num_vertices, j));
  Monomial b = variable(x_var(j)) * variable(y_var(num_vertices, i));
  return Poly::from_terms({{a, 1}, {b, field.neg(1)}}, field);
}

IdealBasis edge_binomials(const SimpleGraph& g, const PrimeField& field) {
  if (g.has_isolated_vertex()) {
    throw InputError("binomial edge ideals require a graph without isolated vertices");
  }
  std::vector<Poly> gens;
  for (auto [i, j] : g.edges()) gens.push_back(edge_binomial(i, j, g.n(), field));
  return IdealBasis(g.n(), field, Provenance::EdgeBinomials, std::move(gens));
}

IdealBasis initial_edge_monomials(const SimpleGraph& g, const PrimeField& field) {
  if (g.has_isolated_vertex()) {
    throw InputError("binomial edge ideals require a graph without isolated vertices");
  }
  if (!is_closed_as_labeled(g)) {
    throw PreconditionError(
        "the labeling is not closed, so the initial ideal is not generated by the x_i*y_j; "
        "compute it with buchberger");
  }
  std::vector<Poly> gens;
  for (auto [i, j] : g.edges()) {
    gens.push_back(Poly::monomial(variable(x_var(i)) * variable(y_var(g.n(), j))));
  }
  return IdealBasis(g.n(), field, Provenance::InitialMonomials, std::move(gens));
}

BipartiteGraph bipartite_initial_graph(const SimpleGraph& g) {
  if (!is_closed_as_labeled(g)) {
    throw PreconditionError("the labeling is not closed; the initial graph is undefined");
  }
  const int n = g.n();
  std::vector<Edge> e;
  for (auto [i, j] : g.edges()) e.emplace_back(i, n + j);
  BipartiteGraph out{SimpleGraph(2 * n, e), 0};
  for (int v = 1; v <= n; ++v) out.side_a |= std::uint64_t{1} << (v - 1);
  return out;
}

namespace {

void append_variables(std::vector<Poly>& gens, int n, int a, int b) {
  for (int i = a; i <= b; ++i) gens.push_back(Poly::monomial(variable(x_var(i))));
  for (int i = a; i <= b; ++i) gens.push_back(Poly::monomial(variable(y_var(n, i))));
}

// Binomials of the complete graph on the given vertices; empty for fewer than two.
void append_clique(std::vector<Poly>& gens, const std::vector<int>& verts, int n,
                   const PrimeField& field) {
  for (std::size_t p = 0; p < verts.size(); ++p)
    for (std::size_t q = p + 1; q < verts.size(); ++q)
      gens.push_back(edge_binomial(verts[p], verts[q], n, field));
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

PQDecomposition construct_P_Q(int n, int a, int b, const PrimeField& field) {
  if (!(1 < a && a <= b && b < n)) {
    throw InputError("construct_P_Q requires 1 < a <= b < n, got n=" + std::to_string(n) +
                     " a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
  std::vector<Poly> p;
  append_clique(p, range(1, n), n, field);

  std::vector<Poly> q;
  append_variables(q, n, a, b);
  append_clique(q, range(1, a - 1), n, field);
  append_clique(q, range(b + 1, n), n, field);

  std::vector<Poly> pq;
  append_variables(pq, n, a, b);
  std::vector<int> outside = range(1, a - 1);
  for (int v = b + 1; v <= n; ++v) outside.push_back(v);
  append_clique(pq, outside, n, field);

  return {IdealBasis(n, field, Provenance::ConstructedP, std::move(p)),
          IdealBasis(n, field, Provenance::ConstructedQ, std::move(q)),
          IdealBasis(n, field, Provenance::ConstructedPPlusQ, std::move(pq))};
}

std::string format_ideal(const IdealBasis& ideal) {
  std::string out;
  for (const auto& g : ideal.gens()) {
    out += to_string(g, ideal.num_vertices(), ideal.field());
    out += '\n';
  }
  return out;
}

IdealBasis parse_ideal(std::string_view text, int num_vertices, const PrimeField& field,
                       Provenance provenance) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Poly> gens;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Poly p = parse_poly(line, num_vertices, field);
      if (p.is_zero()) throw InputError("generator is zero");
      gens.push_back(std::move(p));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return IdealBasis(num_vertices, field, provenance, std::move(gens));
}

}  // namespace bei
