#include "bei/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <thread>
#include <unordered_map>

#include "bei/errors.hpp"
#include "bei/grading.hpp"
#include "bei/sparse_rank.hpp"

namespace bei {

namespace {

struct Element {
  std::uint32_t subset;  // bit b stands for active[b]
  std::uint32_t mono;    // index into the standard monomials
};

struct Block {
  int total_degree = 0;
  std::vector<std::vector<Element>> by_i;
};

using Normal = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (std index, coeff)

class Engine {
 public:
  Engine(std::vector<Poly> gens, std::vector<int> active, const PrimeField& field)
      : gens_(std::move(gens)), active_(std::move(active)), field_(field) {}

  std::vector<Monomial> standard;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_of;

  // rank of d_i : C_i(K) -> C_{i-1}(K).
  std::size_t boundary_rank(const Block& block, int i,
                            std::unordered_map<Monomial, Normal, MonomialHash>& cache) const {
    if (i <= 0 || i >= static_cast<int>(block.by_i.size())) return 0;
    const auto& src = block.by_i[i];
    const auto& dst = block.by_i[i - 1];
    if (src.empty() || dst.empty()) return 0;

    std::unordered_map<std::uint64_t, std::uint32_t> column;
    column.reserve(dst.size());
    for (std::uint32_t c = 0; c < dst.size(); ++c)
      column[std::uint64_t{dst[c].subset} << 32 | dst[c].mono] = c;

    std::vector<SparseRow> rows;
    rows.reserve(src.size());
    for (const auto& e : src) {
      SparseRow row;
      int position = 0;
      for (std::uint32_t rest = e.subset; rest; rest &= rest - 1, ++position) {
        const int b = std::countr_zero(rest);
        const std::uint32_t face = e.subset & ~(std::uint32_t{1} << b);
        const Normal& nf = normal_form(standard[e.mono] * variable(active_[b]), cache);
        for (auto [s, c] : nf) {
          auto it = column.find(std::uint64_t{face} << 32 | s);
          if (it == column.end()) throw std::logic_error("Koszul block is not closed");
          std::uint32_t v = position % 2 == 0 ? c : field_.neg(c);
          row.emplace_back(it->second, v);
        }
      }
      std::sort(row.begin(), row.end());
      // Distinct faces give distinct columns, so no entries need merging.
      rows.push_back(std::move(row));
    }
    return sparse_rank(std::move(rows), static_cast<std::uint32_t>(dst.size()), field_);
  }

 private:
  const Normal& normal_form(const Monomial& m,
                            std::unordered_map<Monomial, Normal, MonomialHash>& cache) const {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    Normal out;
    if (auto s = index_of.find(m); s != index_of.end()) {
      out.emplace_back(s->second, 1);
    } else {
      Poly r = poly_reduce(Poly::monomial(m), gens_, field_);
      for (const auto& t : r.terms()) out.emplace_back(index_of.at(t.mono), t.coeff);
    }
    return cache.emplace(m, std::move(out)).first->second;
  }

  std::vector<Poly> gens_;
  std::vector<int> active_;
  PrimeField field_;
};

bool within(const DegreeKey& k, const DegreeKey& box, int slots) {
  for (int s = 0; s < slots; ++s)
    if (k.exp[s] > box.exp[s]) return false;
  return true;
}

DegreeKey add_keys(const DegreeKey& a, const DegreeKey& b, int slots) {
  DegreeKey out;
  for (int s = 0; s < slots; ++s) out.exp[s] = static_cast<std::uint8_t>(a.exp[s] + b.exp[s]);
  return out;
}

}  // namespace

BettiTable koszul_betti(const GroebnerBasis& gb, const KoszulConfig& config) {
  if (config.max_homological_degree && config.max_internal_degree &&
      *config.max_internal_degree < *config.max_homological_degree) {
    throw InputError("max internal degree must be at least the max homological degree");
  }
  if (config.max_homological_degree.value_or(0) < 0 || config.max_internal_degree.value_or(0) < 0)
    throw InputError("Betti bounds must be nonnegative");

  const PrimeField& field = gb.field();
  const int nv = gb.num_variables();
  const auto leads = minimal_monomial_generators(gb.leading_monomials());

  BettiTable table;
  table.characteristic = field.p();

  Monomial top;  // lcm of the leading monomials
  for (const auto& l : leads) top = lcm(top, l);
  std::vector<int> active;
  Monomial inactive_mask;
  for (int v = 0; v < nv; ++v) {
    if (top.exp[v])
      active.push_back(v);
    else
      inactive_mask.exp[v] = 1;
  }
  const int u = static_cast<int>(active.size());
  if (u > 31) throw InputError("too many variables for the Koszul engine");

  std::vector<Poly> gens;
  for (const auto& g : gb.gens()) gens.push_back(drop_variables(g, inactive_mask));
  const Grading grading = finest_grading(gens, gb.num_vertices());
  const int slots = grading.slots();
  const DegreeKey box = grading.degree(top);

  const int natural_i = std::min<int>(u, static_cast<int>(leads.size()));
  const int natural_j = top.degree();
  const int max_i = std::min(config.max_homological_degree.value_or(natural_i), natural_i);
  const int max_j = std::min(config.max_internal_degree.value_or(natural_j), natural_j);
  table.truncated = config.max_homological_degree.value_or(natural_i) < natural_i ||
                    config.max_internal_degree.value_or(natural_j) < natural_j;
  table.max_i = max_i;
  table.max_j = max_j;

  // The unit ideal.
  if (!leads.empty() && leads.front().is_one()) return table;

  Engine engine(gens, active, field);

  // Standard monomials in the active variables inside the box.
  {
    Monomial m;
    auto rec = [&](auto&& self, int b, int degree) -> void {
      if (b == u) {
        engine.index_of.emplace(m, static_cast<std::uint32_t>(engine.standard.size()));
        engine.standard.push_back(m);
        return;
      }
      const int v = active[b];
      for (int e = 0; degree + e <= max_j; ++e) {
        m.exp[v] = static_cast<std::uint8_t>(e);
        if (e > 0) {
          if (!within(grading.degree(m), box, slots)) break;
          bool divisible = false;
          for (const auto& l : leads)
            if (l.divides(m)) divisible = true;
          if (divisible) break;
        }
        self(self, b + 1, degree + e);
      }
      m.exp[v] = 0;
    };
    rec(rec, 0, 0);
  }

  // Koszul elements e_T (x) m grouped by degree; C_{max_i + 1} feeds the last rank.
  std::vector<std::pair<DegreeKey, int>> subset_key(std::size_t{1} << u);
  for (std::uint32_t t = 0; t < subset_key.size(); ++t) {
    Monomial xt;
    for (int b = 0; b < u; ++b)
      if (t >> b & 1) xt.exp[active[b]] = 1;
    subset_key[t] = {grading.degree(xt), std::popcount(t)};
  }
  std::vector<DegreeKey> mono_key;
  std::vector<int> mono_degree;
  for (const auto& m : engine.standard) {
    mono_key.push_back(grading.degree(m));
    mono_degree.push_back(m.degree());
  }

  std::map<DegreeKey, Block> blocks;
  for (std::uint32_t t = 0; t < subset_key.size(); ++t) {
    const auto& [tk, size] = subset_key[t];
    if (size > max_i + 1) continue;
    for (std::uint32_t mi = 0; mi < engine.standard.size(); ++mi) {
      const int degree = size + mono_degree[mi];
      if (degree > max_j) continue;
      DegreeKey k = add_keys(tk, mono_key[mi], slots);
      if (!within(k, box, slots)) continue;
      Block& block = blocks[k];
      block.total_degree = degree;
      if (static_cast<int>(block.by_i.size()) <= size) block.by_i.resize(size + 1);
      block.by_i[size].push_back({t, mi});
    }
  }

  std::vector<const Block*> work;
  for (const auto& [k, b] : blocks) work.push_back(&b);
  std::vector<std::vector<std::uint64_t>> results(work.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::unordered_map<Monomial, Normal, MonomialHash> cache;
    for (std::size_t w = next++; w < work.size(); w = next++) {
      const Block& block = *work[w];
      const int top_i = std::min<int>(max_i, static_cast<int>(block.by_i.size()) - 1);
      std::vector<std::size_t> rank(top_i + 2, 0);
      for (int i = 1; i <= top_i + 1; ++i) rank[i] = engine.boundary_rank(block, i, cache);
      auto& out = results[w];
      out.assign(top_i + 1, 0);
      for (int i = 0; i <= top_i; ++i) {
        const std::size_t dim = block.by_i[i].size();
        out[i] = dim - rank[i] - rank[i + 1];
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(work.size(), 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t w = 0; w < work.size(); ++w) {
    for (int i = 0; i < static_cast<int>(results[w].size()); ++i) {
      if (results[w][i] == 0) continue;
      const int j = work[w]->total_degree;
      table.set(i, j, table.at(i, j) + results[w][i]);
    }
  }
  return table;
}

}  // namespace bei
