#include <doctest.h>

#include <random>

#include "bei/errors.hpp"
#include "bei/field.hpp"
#include "bei/groebner.hpp"
#include "bei/ideal.hpp"
#include "bei/pigraph.hpp"
#include "bei/poly.hpp"
#include "oracles.hpp"

using namespace bei;

namespace {

const PrimeField F;

Poly P(std::string_view s, int n) { return parse_poly(s, n, F); }

std::vector<std::string> strings(const IdealBasis& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.gens()) out.push_back(to_string(g, ideal.num_vertices(), F));
  return out;
}

Monomial random_monomial(std::mt19937& rng, int vars) {
  std::uniform_int_distribution<int> e(0, 3);
  Monomial m;
  for (int v = 0; v < vars; ++v) m.exp[v] = static_cast<std::uint8_t>(e(rng));
  return m;
}

// Count of degree-d monomials in `vars` variables avoiding every monomial in
// `gens`, by enumerating all exponent vectors.
std::uint64_t count_standard(const std::vector<Monomial>& gens, int vars, int d) {
  std::uint64_t count = 0;
  Monomial m;
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == vars - 1) {
      m.exp[v] = static_cast<std::uint8_t>(left);
      bool inside = false;
      for (const auto& g : gens) inside = inside || g.divides(m);
      if (!inside) ++count;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.exp[v] = static_cast<std::uint8_t>(e);
      self(self, v + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return count;
}

}  // namespace

TEST_CASE("prime field") {
  CHECK(F.p() == 32003);
  CHECK_THROWS_AS(PrimeField(2), InputError);
  CHECK_THROWS_AS(PrimeField(100), InputError);
  PrimeField f(101);
  for (std::uint32_t a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_int(-1) == 100);
  CHECK(f.to_signed(100) == -1);
}

TEST_CASE("lex order is a total order compatible with multiplication") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    Monomial a = random_monomial(rng, 6), b = random_monomial(rng, 6), c = random_monomial(rng, 6);
    CHECK(((a < b) + (b < a) + (a == b)) == 1);
    if (a < b) CHECK(a * c < b * c);
  }
  // x_1 > ... > x_n > y_1 > ... > y_n.
  const int n = 3;
  for (int v = 0; v + 1 < 2 * n; ++v) CHECK(variable(v) > variable(v + 1));
  CHECK(variable(x_var(3)) > variable(y_var(n, 1)));
}

TEST_CASE("polynomial text round trip") {
  for (std::string s : {"x1*y2 - x2*y1", "x1", "-3*x1^2*y3 + 5", "y3^4 - x1*x2*y1 + 2*x3"}) {
    CHECK(to_string(P(s, 3), 3, F) == to_string(P(to_string(P(s, 3), 3, F), 3), 3, F));
  }
  CHECK(to_string(P("x1*y2 - x2*y1", 2), 2, F) == "x1*y2 - x2*y1");
  CHECK(P("x2*y1 + x1*y2 - x1*y2", 2) == P("x2*y1", 2));
  CHECK(P("x1 - x1", 2).is_zero());
  CHECK_THROWS_AS(P("x3", 2), InputError);
  CHECK_THROWS_AS(P("x1 +", 2), InputError);
  CHECK_THROWS_AS(P("z1", 2), InputError);
}

TEST_CASE("edge binomials and initial monomials") {
  CHECK(strings(edge_binomials(complete_graph(2), F)) == std::vector<std::string>{"x1*y2 - x2*y1"});
  CHECK(strings(edge_binomials(path_graph(3), F)) ==
        std::vector<std::string>{"x1*y2 - x2*y1", "x2*y3 - x3*y2"});
  CHECK(strings(edge_binomials(complete_graph(3), F)) ==
        std::vector<std::string>{"x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"});
  CHECK_THROWS_AS(edge_binomials(SimpleGraph(3, {{1, 2}}), F), InputError);

  CHECK(strings(initial_edge_monomials(complete_graph(2), F)) == std::vector<std::string>{"x1*y2"});
  CHECK(strings(initial_edge_monomials(path_graph(3), F)) == std::vector<std::string>{"x1*y2", "x2*y3"});
  CHECK_THROWS_AS(initial_edge_monomials(star_graph(3), F), PreconditionError);
}

TEST_CASE("bipartite initial graph") {
  auto k2 = bipartite_initial_graph(complete_graph(2));
  CHECK(k2.graph.edges() == std::vector<Edge>{{1, 4}});
  auto p3 = bipartite_initial_graph(path_graph(3));
  CHECK(p3.graph.edges() == std::vector<Edge>{{1, 5}, {2, 6}});
  auto k3 = bipartite_initial_graph(complete_graph(3));
  CHECK(k3.graph.edges() == std::vector<Edge>{{1, 5}, {1, 6}, {2, 6}});
  CHECK(k3.side_a == 0b111);
  CHECK_THROWS_AS(bipartite_initial_graph(star_graph(3)), PreconditionError);
}

TEST_CASE("poly_reduce") {
  auto f12 = P("x1*y2 - x2*y1", 3);
  auto f23 = P("x2*y3 - x3*y2", 3);
  std::vector<Poly> one{f12};
  CHECK(poly_reduce(f12, one, F).is_zero());
  CHECK(poly_reduce(P("x1*y2", 3), one, F) == P("x2*y1", 3));
  std::vector<Poly> p3{f12, f23};
  auto s = sub(mul_monomial(f23, variable(y_var(3, 1))), mul_monomial(f12, variable(y_var(3, 3))), F);
  CHECK(poly_reduce(s, p3, F).is_zero());

  std::mt19937 rng(9);
  auto basis = edge_binomials(complete_graph(4), F).gens();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Term> terms;
    for (int k = 0; k < 4; ++k) terms.push_back({random_monomial(rng, 8), static_cast<std::uint32_t>(rng() % 100 + 1)});
    Poly f = Poly::from_terms(terms, F);
    Poly r = poly_reduce(f, basis, F);
    CHECK(poly_reduce(r, basis, F) == r);
    for (const auto& t : r.terms())
      for (const auto& g : basis) CHECK_FALSE(g.leading_monomial().divides(t.mono));
  }
}

TEST_CASE("buchberger") {
  // Closed-labeled PI graphs: the binomials already form the reduced basis.
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_pi_graphs(n)) {
      auto j = edge_binomials(g, F);
      auto gb = buchberger(j);
      auto leads = gb.leading_monomials();
      std::vector<Monomial> expected;
      for (const auto& f : j.gens()) expected.push_back(f.leading_monomial());
      CHECK(minimal_monomial_generators(leads) == minimal_monomial_generators(expected));
      CHECK(gb.gens().size() == j.gens().size());
    }
  }
  auto star = buchberger(edge_binomials(star_graph(3), F));
  CHECK(star.gens().size() > 3);
  int higher = 0;
  for (const auto& m : star.leading_monomials()) higher += m.degree() > 2;
  CHECK(higher > 0);
  CHECK(is_groebner(star.as_ideal()));

  IdealBasis xy(1, F, Provenance::User, {P("x1", 1), P("y1", 1)});
  CHECK(strings(buchberger(xy).as_ideal()) == std::vector<std::string>{"x1", "y1"});
}

TEST_CASE("reduced bases are monic, inter-reduced and sorted") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_graph(3 + trial % 3, 0.6, rng);
    if (g.has_isolated_vertex()) continue;
    auto gb = buchberger(edge_binomials(g, F));
    const auto& gens = gb.gens();
    for (std::size_t a = 0; a < gens.size(); ++a) {
      CHECK(gens[a].leading().coeff == 1);
      if (a > 0) CHECK(gens[a - 1].leading_monomial() > gens[a].leading_monomial());
      for (std::size_t b = 0; b < gens.size(); ++b) {
        if (a == b) continue;
        for (const auto& t : gens[b].terms()) CHECK_FALSE(gens[a].leading_monomial().divides(t.mono));
      }
    }
    CHECK(is_groebner(gb.as_ideal()));
    // Every input generator reduces to zero.
    auto j = edge_binomials(g, F);
    for (const auto& f : j.gens()) CHECK(poly_reduce(f, gens, F).is_zero());
  }
}

TEST_CASE("is_groebner examples") {
  CHECK(is_groebner(edge_binomials(path_graph(3), F)));
  CHECK_FALSE(is_groebner(edge_binomials(star_graph(3), F)));
  CHECK(is_groebner(IdealBasis(3, F, Provenance::User, {P("x1*y2 - x3^2", 3)})));
}

TEST_CASE("Groebner iff closed on connected graphs") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : oracle::labeled_graphs(n)) {
      if (g.has_isolated_vertex() || connected_components(g).size() != 1) continue;
      REQUIRE(is_groebner(edge_binomials(g, F)) == is_closed_as_labeled(g));
    }
  }
}

TEST_CASE("disconnected labelings break the triple criterion but not the Groebner property") {
  // Two disjoint edges: coprime leading terms, yet {1,3} skips vertex 2.
  SimpleGraph g(4, {{1, 3}, {2, 4}});
  CHECK(is_groebner(edge_binomials(g, F)));
  CHECK_FALSE(is_closed_as_labeled(g));
}

TEST_CASE("degree-2 leading terms are the x_i y_j of the edges") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : oracle::labeled_graphs(n)) {
      if (g.has_isolated_vertex()) continue;
      std::set<Monomial> quadratic, expected;
      for (const auto& m : buchberger(edge_binomials(g, F)).leading_monomials())
        if (m.degree() == 2) quadratic.insert(m);
      for (auto [i, j] : g.edges()) expected.insert(variable(x_var(i)) * variable(y_var(n, j)));
      REQUIRE(quadratic == expected);
    }
  }
}

TEST_CASE("construct_P_Q") {
  auto d = construct_P_Q(3, 2, 2, F);
  CHECK(strings(d.p) == strings(edge_binomials(complete_graph(3), F)));
  CHECK(strings(d.q) == std::vector<std::string>{"x2", "y2"});
  auto e = construct_P_Q(4, 2, 3, F);
  CHECK(strings(e.q) == std::vector<std::string>{"x2", "x3", "y2", "y3"});
  CHECK(strings(e.p_plus_q) == std::vector<std::string>{"x2", "x3", "y2", "y3", "x1*y4 - x4*y1"});
  for (int n = 3; n <= 6; ++n)
    for (int a = 2; a < n; ++a)
      for (int b = a; b < n; ++b)
        CHECK(strings(construct_P_Q(n, a, b, F).p) == strings(edge_binomials(complete_graph(n), F)));
  CHECK_THROWS_AS(construct_P_Q(4, 1, 2, F), InputError);
  CHECK_THROWS_AS(construct_P_Q(4, 3, 2, F), InputError);
  CHECK_THROWS_AS(construct_P_Q(4, 2, 4, F), InputError);
}

TEST_CASE("in(P) + in(Q) = in(P+Q)") {
  for (int n = 3; n <= 7; ++n) {
    for (int a = 2; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        auto d = construct_P_Q(n, a, b, F);
        auto lp = buchberger(d.p).leading_monomials();
        auto lq = buchberger(d.q).leading_monomials();
        lp.insert(lp.end(), lq.begin(), lq.end());
        REQUIRE(minimal_monomial_generators(lp) ==
                minimal_monomial_generators(buchberger(d.p_plus_q).leading_monomials()));
      }
    }
  }
}

TEST_CASE("standard monomials") {
  auto k2 = buchberger(edge_binomials(complete_graph(2), F));
  CHECK(standard_monomials(k2, 1).size() == 4);
  CHECK(standard_monomials(k2, 2).size() == 9);
  auto sm = standard_monomials(k2, 3);
  CHECK(std::is_sorted(sm.begin(), sm.end(), std::greater<>()));
  GroebnerBasis x1(1, F, {P("x1", 1)});
  auto deg2 = standard_monomials(x1, 2);
  REQUIRE(deg2.size() == 1);
  CHECK(to_string(deg2[0], 1) == "y1^2");
}

TEST_CASE("hilbert function") {
  GroebnerBasis zero(1, F, {});
  CHECK(hilbert_function(zero, 3) == std::vector<std::uint64_t>{1, 2, 3, 4});
  auto k2 = buchberger(edge_binomials(complete_graph(2), F));
  auto h = hilbert_function(k2, 6);
  for (int d = 0; d <= 6; ++d) {
    CHECK(h[d] == static_cast<std::uint64_t>((d + 1) * (d + 1)));
    CHECK(h[d] == count_standard(k2.leading_monomials(), 4, d));
  }
}

TEST_CASE("hilbert function from the basis matches direct linear algebra") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : enumerate_graphs(n)) {
      auto j = edge_binomials(g, F);
      auto gb = buchberger(j);
      auto from_gb = hilbert_function(gb, 5);
      REQUIRE(from_gb == hilbert_function_by_linear_algebra(j, 5));
      REQUIRE(from_gb == hilbert_function_by_linear_algebra(initial_ideal(gb), 5));
      for (int d = 0; d <= 5; ++d) CHECK(from_gb[d] == count_standard(gb.leading_monomials(), 2 * n, d));
    }
  }
}
