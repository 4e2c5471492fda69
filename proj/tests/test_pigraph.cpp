#include <doctest.h>

#include <numeric>
#include <random>

#include "bei/errors.hpp"
#include "bei/graph.hpp"
#include "bei/pigraph.hpp"
#include "oracles.hpp"

using namespace bei;

namespace {

std::vector<int> identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

SimpleGraph interval_graph(int n, const std::vector<Interval>& facets) {
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      for (auto f : facets)
        if (f.a <= u && v <= f.b) {
          e.emplace_back(u, v);
          break;
        }
  return SimpleGraph(n, e);
}

}  // namespace

TEST_CASE("validate_closed_labeling") {
  CHECK(validate_closed_labeling(path_graph(3), identity(3)));
  auto perm = identity(4);
  do {
    CHECK_FALSE(validate_closed_labeling(star_graph(3), perm));
    CHECK_FALSE(validate_closed_labeling(cycle_graph(4), perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK_FALSE(oracle::has_closed_labeling(cycle_graph(4)));
  CHECK_THROWS_AS(validate_closed_labeling(path_graph(3), std::vector<int>{1, 1, 2}), InputError);
  CHECK_THROWS_AS(validate_closed_labeling(path_graph(3), std::vector<int>{1, 2}), InputError);
}

TEST_CASE("find_closed_labeling examples") {
  for (int n = 1; n <= 6; ++n) {
    auto lab = find_closed_labeling(complete_graph(n));
    REQUIRE(lab);
    CHECK(lab->perm == identity(n));
  }
  CHECK_FALSE(find_closed_labeling(star_graph(3)));
  SimpleGraph bad(4, {{1, 3}, {3, 2}, {2, 4}});
  CHECK(oracle::has_closed_labeling(bad));
  auto lab = find_closed_labeling(bad);
  REQUIRE(lab);
  CHECK(validate_closed_labeling(bad, lab->perm));
}

TEST_CASE("find_closed_labeling agrees with permutation search on all small graphs") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : oracle::labeled_graphs(n)) {
      auto lab = find_closed_labeling(g);
      REQUIRE(lab.has_value() == oracle::has_closed_labeling(g));
      if (!lab) continue;
      REQUIRE(validate_closed_labeling(g, lab->perm));
      const SimpleGraph h = g.relabeled(lab->perm);
      if (connected_components(g).size() == 1 && n > 1) {
        auto f = facet_intervals(h, ClosedLabeling{identity(n)}).intervals;
        CHECK(f.front().a == 1);
        CHECK(f.back().b == n);
        for (std::size_t t = 1; t < f.size(); ++t) {
          CHECK(f[t - 1].a < f[t].a);
          CHECK(f[t - 1].b < f[t].b);
          CHECK(f[t].a <= f[t - 1].b + 1);
        }
      }
    }
  }
}

TEST_CASE("closed labelings exist independently of the presentation") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    auto g = oracle::random_graph(n, 0.55, rng);
    auto perm = identity(n);
    std::shuffle(perm.begin(), perm.end(), rng);
    REQUIRE(find_closed_labeling(g).has_value() == find_closed_labeling(g.relabeled(perm)).has_value());
  }
}

TEST_CASE("exhaustive labeling search") {
  auto lab = find_closed_labeling_exhaustive(SimpleGraph(4, {{1, 3}, {3, 2}, {2, 4}}));
  REQUIRE(lab);
  CHECK(lab->perm == std::vector<int>{1, 3, 2, 4});
  CHECK_FALSE(find_closed_labeling_exhaustive(star_graph(3)));
}

TEST_CASE("facet intervals") {
  CHECK(facet_intervals(path_graph(3), {identity(3)}).intervals == std::vector<Interval>{{1, 2}, {2, 3}});
  CHECK(facet_intervals(complete_graph(4), {identity(4)}).intervals == std::vector<Interval>{{1, 4}});
  auto g = interval_graph(5, {{1, 3}, {2, 5}});
  CHECK(facet_intervals(g, {identity(5)}).intervals == std::vector<Interval>{{1, 3}, {2, 5}});
  CHECK(oracle::maximal_cliques(g) == std::set<VertexSet>{{1, 2, 3}, {2, 3, 4, 5}});
  CHECK(to_string(facet_intervals(path_graph(3), {identity(3)})) == "[1,2],[2,3]");
  CHECK_THROWS_AS(facet_intervals(star_graph(3), {identity(4)}), PreconditionError);
}

TEST_CASE("facet intervals are exactly the maximal cliques") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : enumerate_pi_graphs(n)) {
      std::set<VertexSet> from_intervals;
      for (auto f : facet_intervals(g, {identity(n)}).intervals) {
        VertexSet s;
        for (int v = f.a; v <= f.b; ++v) s.push_back(v);
        from_intervals.insert(s);
      }
      REQUIRE(from_intervals == oracle::maximal_cliques(g));
    }
  }
}

TEST_CASE("classify_reg2") {
  CHECK(classify_reg2(disjoint_union(complete_graph(2), complete_graph(3))) == Reg2Class{DisjointTwoCliques{2, 3}});
  CHECK(classify_reg2(path_graph(3)) == Reg2Class{TwoOverlappingIntervalCliques{2, 2}});
  CHECK(classify_reg2(complete_graph(4)) == Reg2Class{NotRegTwo{}});
  CHECK(classify_reg2(path_graph(4)) == Reg2Class{NotRegTwo{}});
  CHECK(classify_reg2(interval_graph(5, {{1, 3}, {2, 5}})) == Reg2Class{TwoOverlappingIntervalCliques{2, 3}});
  // Presented in a non-closed labeling: still classified through a closed one.
  CHECK(classify_reg2(SimpleGraph(3, {{1, 3}, {2, 3}})) == Reg2Class{TwoOverlappingIntervalCliques{2, 2}});
  CHECK_THROWS_AS(classify_reg2(star_graph(3)), PreconditionError);
  CHECK_THROWS_AS(classify_reg2(SimpleGraph(3, {{1, 2}})), PreconditionError);
  CHECK(to_string(Reg2Class{DisjointTwoCliques{2, 3}}) == "DisjointTwoCliques(2,3)");
}

TEST_CASE("canonical forms identify isomorphic graphs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    auto g = oracle::random_graph(n, 0.5, rng);
    auto h = oracle::random_graph(n, 0.5, rng);
    auto perm = identity(n);
    std::shuffle(perm.begin(), perm.end(), rng);
    REQUIRE(canonical_code(g) == canonical_code(g.relabeled(perm)));
    REQUIRE((canonical_code(g) == canonical_code(h)) == oracle::isomorphic(g, h));
  }
}

TEST_CASE("enumerate_pi_graphs against brute force classes") {
  CHECK(enumerate_pi_graphs(1).empty());
  REQUIRE(enumerate_pi_graphs(2).size() == 1);
  CHECK(enumerate_pi_graphs(2)[0] == complete_graph(2));

  for (int n = 2; n <= 6; ++n) {
    // Oracle: all labeled graphs, filtered, reduced to isomorphism classes.
    std::vector<SimpleGraph> classes;
    for (const auto& g : oracle::labeled_graphs(n)) {
      if (g.has_isolated_vertex() || !oracle::has_closed_labeling(g)) continue;
      bool seen = false;
      for (const auto& c : classes)
        if (oracle::isomorphic(c, g)) seen = true;
      if (!seen) classes.push_back(g);
    }
    auto got = enumerate_pi_graphs(n);
    REQUIRE(got.size() == classes.size());
    for (const auto& g : got) {
      CHECK_FALSE(g.has_isolated_vertex());
      CHECK(is_closed_as_labeled(g));
      int matches = 0;
      for (const auto& c : classes) matches += oracle::isomorphic(c, g);
      CHECK(matches == 1);
    }
  }
  auto four = enumerate_pi_graphs(4);
  auto contains = [&](const SimpleGraph& h) {
    for (const auto& g : four)
      if (oracle::isomorphic(g, h)) return true;
    return false;
  };
  CHECK(contains(disjoint_union(complete_graph(2), complete_graph(2))));
  CHECK_FALSE(contains(cycle_graph(4)));
  CHECK_FALSE(contains(star_graph(3)));
  CHECK_THROWS_AS(enumerate_pi_graphs(0), InputError);
  CHECK_THROWS_AS(enumerate_pi_graphs(9), InputError);
}

TEST_CASE("enumerate_pi_graphs at n = 7 gives distinct closed classes") {
  auto graphs = enumerate_pi_graphs(7);
  std::set<std::uint64_t> codes;
  for (const auto& g : graphs) {
    CHECK(is_closed_as_labeled(g));
    CHECK_FALSE(g.has_isolated_vertex());
    codes.insert(canonical_code(g));
  }
  CHECK(codes.size() == graphs.size());
}

TEST_CASE("enumerate_graphs covers every class without isolated vertices") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<SimpleGraph> classes;
    for (const auto& g : oracle::labeled_graphs(n)) {
      if (g.has_isolated_vertex()) continue;
      bool seen = false;
      for (const auto& c : classes)
        if (oracle::isomorphic(c, g)) seen = true;
      if (!seen) classes.push_back(g);
    }
    auto got = enumerate_graphs(n);
    REQUIRE(got.size() == classes.size());
    for (const auto& g : got)
      if (find_closed_labeling(g)) CHECK(is_closed_as_labeled(g));
  }
}
