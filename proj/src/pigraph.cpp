#include "bei/pigraph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "bei/errors.hpp"

namespace bei {

namespace {

std::uint64_t range_mask(int lo, int hi) {  // vertices lo..hi inclusive, 1-based
  if (hi < lo) return 0;
  std::uint64_t upto_hi = hi >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
  std::uint64_t below_lo = (std::uint64_t{1} << (lo - 1)) - 1;
  return upto_hi & ~below_lo;
}

bool triple_criterion(const SimpleGraph& g) {
  for (auto [i, k] : g.edges()) {
    if (k == i + 1) continue;
    std::uint64_t between = range_mask(i + 1, k - 1);
    if ((g.neighbor_mask(i) & between) != between) return false;
    if ((g.neighbor_mask(k) & between) != between) return false;
  }
  return true;
}

bool has_induced_claw(const SimpleGraph& g) {
  for (int v = 1; v <= g.n(); ++v) {
    auto nb = mask_to_vertices(g.neighbor_mask(v));
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.has_edge(nb[a], nb[b])) continue;
        for (std::size_t c = b + 1; c < nb.size(); ++c)
          if (!g.has_edge(nb[a], nb[c]) && !g.has_edge(nb[b], nb[c])) return true;
      }
  }
  return false;
}

// Candidate labelings of a connected graph derived from every consecutive
// ordering of its maximal cliques. Positions are 1-based local labels.
std::optional<std::vector<int>> label_connected(const SimpleGraph& h) {
  const int n = h.n();
  if (n == 1) return std::vector<int>{1};
  auto facets_sets = maximal_cliques(h).facets;
  std::vector<std::uint64_t> facets;
  for (const auto& f : facets_sets) facets.push_back(vertices_to_mask(f));
  const std::size_t r = facets.size();

  std::optional<std::vector<int>> best;
  std::vector<std::size_t> order;
  std::vector<bool> used(r, false);

  auto derive = [&]() {
    std::vector<int> first(n + 1, -1), last(n + 1, -1);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      for (std::uint64_t m = facets[order[pos]]; m != 0; m &= m - 1) {
        int v = std::countr_zero(m) + 1;
        if (first[v] < 0) first[v] = static_cast<int>(pos);
        last[v] = static_cast<int>(pos);
      }
    }
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 1);
    std::sort(verts.begin(), verts.end(), [&](int u, int v) {
      if (first[u] != first[v]) return first[u] < first[v];
      if (last[u] != last[v]) return last[u] < last[v];
      return u < v;
    });
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[verts[k] - 1] = k + 1;
    if (!triple_criterion(h.relabeled(perm))) return;
    if (!best || perm < *best) best = perm;
  };

  std::function<void(std::uint64_t)> extend = [&](std::uint64_t closed) {
    if (order.size() == r) {
      derive();
      return;
    }
    for (std::size_t f = 0; f < r; ++f) {
      if (used[f] || (facets[f] & closed) != 0) continue;
      std::uint64_t next_closed = closed;
      if (!order.empty()) {
        std::uint64_t last_facet = facets[order.back()];
        if ((last_facet & facets[f]) == 0) continue;
        next_closed |= last_facet & ~facets[f];
      }
      bool blocked = false;
      for (std::size_t g = 0; g < r && !blocked; ++g)
        if (!used[g] && g != f && (facets[g] & next_closed) != 0) blocked = true;
      if (blocked) continue;
      used[f] = true;
      order.push_back(f);
      extend(next_closed);
      order.pop_back();
      used[f] = false;
    }
  };
  extend(0);
  return best;
}

}  // namespace

std::string to_string(const Reg2Class& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DisjointTwoCliques>) {
          return "DisjointTwoCliques(" + std::to_string(v.m) + "," + std::to_string(v.p) + ")";
        } else if constexpr (std::is_same_v<T, TwoOverlappingIntervalCliques>) {
          return "TwoOverlappingIntervalCliques(" + std::to_string(v.a) + "," +
                 std::to_string(v.b) + ")";
        } else {
          return "NotRegTwo";
        }
      },
      c);
}

std::string to_string(const FacetIntervals& f) {
  std::ostringstream out;
  for (std::size_t k = 0; k < f.intervals.size(); ++k) {
    if (k) out << ',';
    out << '[' << f.intervals[k].a << ',' << f.intervals[k].b << ']';
  }
  return out.str();
}

bool validate_closed_labeling(const SimpleGraph& g, std::span<const int> perm) {
  return triple_criterion(g.relabeled(perm));
}

bool is_closed_as_labeled(const SimpleGraph& g) { return triple_criterion(g); }

std::optional<ClosedLabeling> find_closed_labeling(const SimpleGraph& g) {
  if (has_induced_claw(g)) return std::nullopt;
  ClosedLabeling out;
  out.perm.assign(g.n(), 0);
  int offset = 0;
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    auto local = label_connected(sub.graph);
    if (!local) return std::nullopt;
    for (std::size_t k = 0; k < comp.size(); ++k) out.perm[comp[k] - 1] = offset + (*local)[k];
    offset += static_cast<int>(comp.size());
  }
  return out;
}

std::optional<ClosedLabeling> find_closed_labeling_exhaustive(const SimpleGraph& g) {
  if (g.n() > 10) throw InputError("exhaustive labeling search is limited to 10 vertices");
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (triple_criterion(g.relabeled(perm))) return ClosedLabeling{perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

FacetIntervals facet_intervals(const SimpleGraph& g, const ClosedLabeling& labeling) {
  SimpleGraph h = g.relabeled(labeling.perm);
  if (!triple_criterion(h)) throw PreconditionError("labeling is not closed");
  FacetIntervals out;
  for (const auto& f : maximal_cliques(h).facets) {
    // Closedness makes every facet an interval.
    out.intervals.push_back({f.front(), f.back()});
  }
  std::sort(out.intervals.begin(), out.intervals.end(),
            [](const Interval& x, const Interval& y) { return x.a < y.a; });
  return out;
}

Reg2Class classify_reg2(const SimpleGraph& g) {
  if (g.has_isolated_vertex()) throw PreconditionError("graph has an isolated vertex");
  auto labeling = find_closed_labeling(g);
  if (!labeling) throw PreconditionError("graph is not a proper interval graph");
  auto comps = connected_components(g);
  if (comps.size() == 2) {
    bool both_complete = std::all_of(comps.begin(), comps.end(), [&](const VertexSet& c) {
      return is_clique(g, vertices_to_mask(c));
    });
    if (both_complete) {
      return DisjointTwoCliques{static_cast<int>(comps[0].size()),
                                static_cast<int>(comps[1].size())};
    }
    return NotRegTwo{};
  }
  if (comps.size() != 1) return NotRegTwo{};
  if (is_closed_as_labeled(g)) {
    std::vector<int> id(g.n());
    std::iota(id.begin(), id.end(), 1);
    labeling = ClosedLabeling{id};
  }
  auto f = facet_intervals(g, *labeling);
  if (f.intervals.size() != 2) return NotRegTwo{};
  int a = f.intervals[1].a;
  int b = f.intervals[0].b;
  if (f.intervals[0].a != 1 || f.intervals[1].b != g.n() || !(1 < a && a <= b && b < g.n())) {
    return NotRegTwo{};
  }
  return TwoOverlappingIntervalCliques{a, b};
}

namespace {

std::uint64_t code_for_order(const SimpleGraph& g, const std::vector<int>& ord) {
  std::uint64_t code = 0;
  const int n = g.n();
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) code = (code << 1) | (g.has_edge(ord[p], ord[q]) ? 1 : 0);
  return code;
}

std::pair<std::uint64_t, std::vector<int>> canonical_search(const SimpleGraph& g) {
  if (g.n() > 11) throw InputError("canonical form is limited to 11 vertices");
  const int n = g.n();
  std::vector<int> ord(n);
  std::iota(ord.begin(), ord.end(), 1);
  std::stable_sort(ord.begin(), ord.end(),
                   [&](int u, int v) { return g.degree(u) > g.degree(v); });
  std::vector<std::pair<int, int>> groups;  // [begin, end) ranges of equal degree
  for (int k = 0; k < n;) {
    int e = k;
    while (e < n && g.degree(ord[e]) == g.degree(ord[k])) ++e;
    groups.emplace_back(k, e);
    k = e;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_ord = ord;
  std::function<void(std::size_t)> rec = [&](std::size_t gi) {
    if (gi == groups.size()) {
      auto c = code_for_order(g, ord);
      if (c < best) {
        best = c;
        best_ord = ord;
      }
      return;
    }
    auto [b, e] = groups[gi];
    std::sort(ord.begin() + b, ord.begin() + e);
    do {
      rec(gi + 1);
    } while (std::next_permutation(ord.begin() + b, ord.begin() + e));
  };
  rec(0);
  return {best, best_ord};
}

SimpleGraph present(const SimpleGraph& canon) {
  if (auto lab = find_closed_labeling(canon)) return canon.relabeled(lab->perm);
  return canon;
}

std::vector<SimpleGraph> sorted_classes(std::map<std::uint64_t, SimpleGraph>& classes) {
  std::vector<std::pair<std::uint64_t, SimpleGraph>> items(classes.begin(), classes.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.second.edge_count() != y.second.edge_count())
      return x.second.edge_count() < y.second.edge_count();
    return x.first < y.first;
  });
  std::vector<SimpleGraph> out;
  for (auto& [code, g] : items) out.push_back(present(g));
  return out;
}

}  // namespace

std::uint64_t canonical_code(const SimpleGraph& g) { return canonical_search(g).first; }

SimpleGraph canonical_form(const SimpleGraph& g) {
  auto [code, ord] = canonical_search(g);
  std::vector<int> perm(g.n());
  for (int k = 0; k < g.n(); ++k) perm[ord[k] - 1] = k + 1;
  return g.relabeled(perm);
}

std::vector<SimpleGraph> enumerate_pi_graphs(int n) {
  if (n < 1 || n > 8) throw InputError("enumerate_pi_graphs supports 1 <= n <= 8");
  // A labeling is closed iff each vertex i is adjacent exactly to i+1..reach[i]
  // among the larger vertices, with reach non-decreasing.
  std::map<std::uint64_t, SimpleGraph> classes;
  std::vector<int> reach(n + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int floor) {
    if (i > n) {
      std::vector<Edge> e;
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= reach[u]; ++v) e.emplace_back(u, v);
      SimpleGraph g(n, e);
      if (g.has_isolated_vertex()) return;
      auto [code, ord] = canonical_search(g);
      if (!classes.contains(code)) classes.emplace(code, canonical_form(g));
      return;
    }
    for (int r = std::max(i, floor); r <= n; ++r) {
      reach[i] = r;
      rec(i + 1, r);
    }
  };
  rec(1, 1);
  return sorted_classes(classes);
}

std::vector<SimpleGraph> enumerate_graphs(int n) {
  if (n < 1 || n > 6) throw InputError("enumerate_graphs supports 1 <= n <= 6");
  std::vector<Edge> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  std::map<std::uint64_t, SimpleGraph> classes;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<Edge> e;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (bits >> k & 1) e.push_back(pairs[k]);
    SimpleGraph g(n, e);
    if (g.has_isolated_vertex()) continue;
    auto code = canonical_code(g);
    if (!classes.contains(code)) classes.emplace(code, canonical_form(g));
  }
  return sorted_classes(classes);
}

}  // namespace bei
