#include "bei/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "bei/grading.hpp"
#include "bei/sparse_rank.hpp"

namespace bei {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.leading_monomial());
  return out;
}

IdealBasis GroebnerBasis::as_ideal() const {
  return IdealBasis(num_vertices_, field_, Provenance::User, gens_);
}

namespace {

const Poly* find_reducer(const Monomial& m, std::span<const Poly> basis) {
  for (const auto& g : basis)
    if (g.leading_monomial().divides(m)) return &g;
  return nullptr;
}

}  // namespace

Poly poly_reduce(const Poly& f, std::span<const Poly> basis, const PrimeField& field) {
  std::vector<Term> rem;
  Poly p = f;
  while (!p.is_zero()) {
    const Term lead = p.leading();
    if (const Poly* g = find_reducer(lead.mono, basis)) {
      std::uint32_t c = field.mul(lead.coeff, field.inv(g->leading().coeff));
      p = sub_mul(p, c, quotient(lead.mono, g->leading_monomial()), *g, field);
    } else {
      rem.push_back(lead);
      std::vector<Term> tail(p.terms().begin() + 1, p.terms().end());
      p = Poly::from_sorted_terms(std::move(tail));
    }
  }
  return Poly::from_sorted_terms(std::move(rem));
}

Poly s_polynomial(const Poly& f, const Poly& g, const PrimeField& field) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = scale(mul_monomial(f, quotient(l, f.leading_monomial())), field.inv(f.leading().coeff),
                 field);
  std::uint32_t cg = field.inv(g.leading().coeff);
  return sub_mul(a, cg, quotient(l, g.leading_monomial()), g, field);
}

namespace {

struct PairKey {
  int degree;
  Monomial lcm;
  int i;
  int j;
  auto operator<=>(const PairKey&) const = default;
};

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

GroebnerBasis buchberger(const IdealBasis& basis) {
  const PrimeField& F = basis.field();
  std::vector<Poly> g;
  for (const auto& f : basis.gens()) g.push_back(make_monic(f, F));

  std::set<PairKey> queue;
  std::set<std::pair<int, int>> pending;
  auto add_pair = [&](int i, int j) {
    Monomial l = lcm(g[i].leading_monomial(), g[j].leading_monomial());
    queue.insert({l.degree(), l, i, j});
    pending.insert(ordered(i, j));
  };
  for (int j = 0; j < static_cast<int>(g.size()); ++j)
    for (int i = 0; i < j; ++i) add_pair(i, j);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase(ordered(pk.i, pk.j));

    const Monomial& li = g[pk.i].leading_monomial();
    const Monomial& lj = g[pk.j].leading_monomial();
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !chain; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!g[k].leading_monomial().divides(pk.lcm)) continue;
      chain = !pending.contains(ordered(pk.i, k)) && !pending.contains(ordered(pk.j, k));
    }
    if (chain) continue;

    Poly r = poly_reduce(s_polynomial(g[pk.i], g[pk.j], F), g, F);
    if (r.is_zero()) continue;
    g.push_back(make_monic(r, F));
    const int k = static_cast<int>(g.size()) - 1;
    for (int i = 0; i < k; ++i) add_pair(i, k);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Poly> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& la = g[a].leading_monomial();
      const Monomial& lb = g[b].leading_monomial();
      if (lb.divides(la) && (lb != la || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }

  // Inter-reduce tails.
  std::vector<Poly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Poly> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    const auto& terms = minimal[a].terms();
    Poly tail = Poly::from_sorted_terms(std::vector<Term>(terms.begin() + 1, terms.end()));
    Poly red = poly_reduce(tail, others, F);
    Poly out = add(Poly::monomial(terms.front().mono, terms.front().coeff), red, F);
    reduced.push_back(make_monic(out, F));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& x, const Poly& y) {
    return x.leading_monomial() > y.leading_monomial();
  });
  return GroebnerBasis(basis.num_vertices(), F, std::move(reduced));
}

bool is_groebner(const IdealBasis& basis) {
  const auto& g = basis.gens();
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Poly s = s_polynomial(g[i], g[j], basis.field());
      if (!poly_reduce(s, g, basis.field()).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& o : gens)
      if (o != m && o.divides(m)) redundant = true;
    if (!redundant) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

IdealBasis initial_ideal(const GroebnerBasis& gb) {
  std::vector<Poly> gens;
  for (const auto& m : minimal_monomial_generators(gb.leading_monomials()))
    gens.push_back(Poly::monomial(m));
  return IdealBasis(gb.num_vertices(), gb.field(), Provenance::InitialMonomials, std::move(gens));
}

namespace {

// Visits every monomial of degree <= max_degree avoiding the ideal spanned by
// `leads`, in decreasing lex order. Divisibility of a partial monomial is
// inherited by all its completions, which is what makes the pruning valid.
template <class Visit>
void walk_standard(const std::vector<Monomial>& leads, int num_vars, int max_degree,
                   Visit&& visit) {
  Monomial m;
  auto in_ideal = [&] {
    for (const auto& l : leads)
      if (l.divides(m)) return true;
    return false;
  };
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == num_vars) {
      visit(m, max_degree - remaining);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      m.exp[var] = static_cast<std::uint8_t>(e);
      if (e > 0 && in_ideal()) continue;
      self(self, var + 1, remaining - e);
    }
    m.exp[var] = 0;
  };
  rec(rec, 0, max_degree);
}

}  // namespace

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  walk_standard(gb.leading_monomials(), gb.num_variables(), degree,
                [&](const Monomial& m, int d) {
                  if (d == degree) out.push_back(m);
                });
  return out;
}

std::vector<std::uint64_t> hilbert_function(const GroebnerBasis& gb, int max_degree) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(std::max(max_degree + 1, 0)), 0);
  if (max_degree < 0) return out;
  walk_standard(gb.leading_monomials(), gb.num_variables(), max_degree,
                [&](const Monomial&, int d) { ++out[d]; });
  return out;
}

std::vector<std::uint64_t> hilbert_function_by_linear_algebra(const IdealBasis& ideal,
                                                              int max_degree) {
  const int nv = ideal.num_variables();
  const PrimeField& F = ideal.field();
  Grading grading = finest_grading(ideal.gens(), ideal.num_vertices());

  std::vector<std::uint64_t> out;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<Monomial> monos;
    walk_standard({}, nv, d, [&](const Monomial& m, int deg) {
      if (deg == d) monos.push_back(m);
    });

    // Columns: degree-d monomials, split into graded blocks.
    std::map<DegreeKey, std::uint32_t> block_of;
    std::vector<std::uint32_t> block_size;
    std::unordered_map<Monomial, std::pair<std::uint32_t, std::uint32_t>, MonomialHash> col;
    for (const auto& m : monos) {
      auto [it, fresh] = block_of.try_emplace(grading.degree(m), block_size.size());
      if (fresh) block_size.push_back(0);
      col[m] = {it->second, block_size[it->second]++};
    }

    std::vector<std::vector<SparseRow>> rows(block_size.size());
    for (const auto& g : ideal.gens()) {
      const int e = g.leading_monomial().degree();
      if (e > d) continue;
      std::vector<Monomial> shifts;
      walk_standard({}, nv, d - e, [&](const Monomial& m, int deg) {
        if (deg == d - e) shifts.push_back(m);
      });
      for (const auto& s : shifts) {
        SparseRow row;
        std::uint32_t block = 0;
        for (const auto& t : g.terms()) {
          auto [b, c] = col.at(t.mono * s);
          block = b;
          row.emplace_back(c, t.coeff);
        }
        std::sort(row.begin(), row.end());
        rows[block].push_back(std::move(row));
      }
    }

    std::uint64_t dim = monos.size();
    for (std::size_t b = 0; b < rows.size(); ++b)
      dim -= sparse_rank(std::move(rows[b]), block_size[b], F);
    out.push_back(dim);
  }
  return out;
}

}  // namespace bei
