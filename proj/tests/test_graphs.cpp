#include <doctest.h>

#include <random>

#include "bei/edge_list.hpp"
#include "bei/errors.hpp"
#include "bei/graph.hpp"
#include "oracles.hpp"

using namespace bei;

TEST_CASE("complement examples") {
  CHECK(complement(complete_graph(3)) == SimpleGraph(3));
  CHECK(complement(SimpleGraph(2)) == complete_graph(2));
  CHECK(complement(path_graph(3)) == SimpleGraph(3, {{1, 3}}));
}

TEST_CASE("complement is an involution") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : oracle::labeled_graphs(n)) REQUIRE(complement(complement(g)) == g);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::random_graph(7 + trial % 30, 0.4, rng);
    REQUIRE(complement(complement(g)) == g);
  }
}

TEST_CASE("induced subgraphs") {
  CHECK(induced_subgraph(complete_graph(4), {1, 2, 3}).graph == complete_graph(3));
  CHECK(induced_subgraph(path_graph(3), {}).graph.n() == 0);
  auto sub = induced_subgraph(path_graph(4), {1, 2, 4});
  CHECK(sub.graph == SimpleGraph(3, {{1, 2}}));
  CHECK(sub.original == std::vector<int>{1, 2, 4});
  CHECK_THROWS_AS(induced_subgraph(path_graph(3), {1, 4}), InputError);
  CHECK_THROWS_AS(induced_subgraph(path_graph(3), {0}), InputError);
}

TEST_CASE("connected components") {
  auto g = disjoint_union(complete_graph(2), complete_graph(3));
  CHECK(connected_components(g) == std::vector<VertexSet>{{1, 2}, {3, 4, 5}});
  CHECK(connected_components(complete_graph(5)).size() == 1);
  // Complement of a complete bipartite graph: exactly the two parts.
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      std::vector<Edge> e;
      for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= a + b; ++v) e.emplace_back(u, v);
      auto comps = connected_components(complement(SimpleGraph(a + b, e)));
      REQUIRE(comps.size() == 2);
      CHECK(static_cast<int>(comps[0].size()) == a);
    }
  }
}

TEST_CASE("maximal cliques") {
  CHECK(maximal_cliques(path_graph(3)).facets == std::vector<VertexSet>{{1, 2}, {2, 3}});
  CHECK(maximal_cliques(complete_graph(4)).facets == std::vector<VertexSet>{{1, 2, 3, 4}});
  SimpleGraph two({4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}});
  auto facets = maximal_cliques(two).facets;
  CHECK(std::set<VertexSet>(facets.begin(), facets.end()) == oracle::maximal_cliques(two));
  CHECK(facets == std::vector<VertexSet>{{1, 2, 3}, {2, 3, 4}});
}

TEST_CASE("maximal cliques match subset enumeration and cover every edge") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_graph(2 + trial % 8, 0.5, rng);
    auto facets = maximal_cliques(g).facets;
    REQUIRE(std::set<VertexSet>(facets.begin(), facets.end()) == oracle::maximal_cliques(g));
    for (std::size_t a = 0; a < facets.size(); ++a)
      for (std::size_t b = 0; b < facets.size(); ++b)
        if (a != b)
          CHECK_FALSE(std::includes(facets[b].begin(), facets[b].end(), facets[a].begin(),
                                    facets[a].end()));
    for (auto [u, v] : g.edges()) {
      bool covered = false;
      for (const auto& f : facets)
        covered = covered || (std::binary_search(f.begin(), f.end(), u) &&
                              std::binary_search(f.begin(), f.end(), v));
      CHECK(covered);
    }
  }
}

TEST_CASE("f-vector") {
  CHECK(f_vector(complete_graph(3)).counts == std::vector<std::uint64_t>{3, 3, 1});
  CHECK(f_vector(path_graph(3)).counts == std::vector<std::uint64_t>{3, 2});
  CHECK(f_vector(complete_graph(4)).counts == std::vector<std::uint64_t>{4, 6, 4, 1});
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : oracle::labeled_graphs(n)) REQUIRE(f_vector(g).counts == oracle::clique_counts(g));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_graph(6 + trial % 3, 0.6, rng);
    auto f = f_vector(g).counts;
    REQUIRE(f == oracle::clique_counts(g));
    if (!g.has_isolated_vertex()) {
      CHECK(f[0] == static_cast<std::uint64_t>(g.n()));
      CHECK(f[1] == g.edge_count());
    }
  }
}

TEST_CASE("longest induced path") {
  for (int n = 2; n <= 6; ++n) CHECK(longest_induced_path_length(complete_graph(n)) == 1);
  CHECK(longest_induced_path_length(path_graph(3)) == 2);
  CHECK(longest_induced_path_length(cycle_graph(5)) == 3);
  CHECK(oracle::longest_induced_path(cycle_graph(5)) == 3);
  CHECK(longest_induced_path_length(SimpleGraph(4)) == 0);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = oracle::random_graph(2 + trial % 6, 0.45, rng);
    REQUIRE(longest_induced_path_length(g) == oracle::longest_induced_path(g));
  }
}

TEST_CASE("graph construction rejects bad edges") {
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 2}, {2, 1}}), InputError);
  CHECK(star_graph(3).has_isolated_vertex() == false);
  CHECK(SimpleGraph(3, {{1, 2}}).has_isolated_vertex());
}

TEST_CASE("edge-list format") {
  auto g = parse_edge_list("# a path\nn 3\n1 2  # first\n\n2 3\n");
  CHECK(g == path_graph(3));
  CHECK(parse_edge_list(format_edge_list(star_graph(3))) == star_graph(3));
  auto message = [](std::string_view text) {
    try {
      parse_edge_list(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("n 3\n2 2\n").rfind("line 2:", 0) == 0);
  CHECK(message("n 3\n1 2\n1 5\n").rfind("line 3:", 0) == 0);
  CHECK(message("n 3\n1 2\n2 1\n").rfind("line 3:", 0) == 0);
  CHECK(message("1 2\n").rfind("line 1:", 0) == 0);
  CHECK(message("n 3\n1 x\n").rfind("line 2:", 0) == 0);
  CHECK(message("") != "");
}

TEST_CASE("inline graph format") {
  auto g = parse_inline_graph("4:1-2,1-3,1-4");
  CHECK(g == star_graph(3));
  CHECK(format_inline_graph(g) == "4:1-2,1-3,1-4");
  CHECK(parse_inline_graph("2:") == SimpleGraph(2));
  CHECK_THROWS_AS(parse_inline_graph("4;1-2"), InputError);
  CHECK_THROWS_AS(parse_inline_graph("4:1-2,3"), InputError);
  CHECK_THROWS_AS(parse_inline_graph("3:1-1"), InputError);
}
