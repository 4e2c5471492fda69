#include "bei/hochster.hpp"

#include <algorithm>
#include <bit>

#include "bei/errors.hpp"
#include "bei/homology.hpp"

namespace bei {

namespace {

std::uint64_t support_mask(const Monomial& m, int num_vars) {
  std::uint64_t mask = 0;
  for (int v = 0; v < num_vars; ++v)
    if (m.exp[v]) mask |= std::uint64_t{1} << v;
  return mask;
}

}  // namespace

BettiTable hochster_betti(const IdealBasis& ideal, const BettiBounds& bounds) {
  if (!ideal.all_squarefree_monomial()) {
    throw InputError("Hochster's formula needs squarefree monomial generators");
  }
  const int nv = ideal.num_variables();

  // Work on the variables that occur; the others are cone points of every
  // restriction they belong to, so they contribute nothing.
  std::vector<std::uint64_t> gens;
  std::uint64_t support = 0;
  for (const auto& g : ideal.gens()) {
    std::uint64_t m = support_mask(g.leading_monomial(), nv);
    gens.push_back(m);
    support |= m;
  }
  const int s = std::popcount(support);

  std::vector<int> var_of_bit;
  for (int v = 0; v < nv; ++v)
    if (support >> v & 1) var_of_bit.push_back(v);
  auto compress = [&](std::uint64_t m) {
    std::uint64_t out = 0;
    for (int b = 0; b < s; ++b)
      if (m >> var_of_bit[b] & 1) out |= std::uint64_t{1} << b;
    return out;
  };
  for (auto& g : gens) g = compress(g);

  BettiTable table;
  table.characteristic = ideal.field().p();
  table.max_i = bounds.max_homological_degree.value_or(s);
  table.max_j = bounds.max_internal_degree.value_or(s);
  table.truncated = table.max_i < s || table.max_j < s;
  table.max_i = std::min(table.max_i, s);
  table.max_j = std::min(table.max_j, s);

  // The unit ideal: S/I = 0.
  if (std::find(gens.begin(), gens.end(), 0u) != gens.end()) return table;

  const std::uint64_t full = s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;
  std::vector<bool> is_face(std::size_t{1} << s);
  for (std::uint64_t f = 0; f <= full; ++f) {
    bool face = true;
    for (auto g : gens)
      if ((g & f) == g) face = false;
    is_face[f] = face;
  }

  for (std::uint64_t w = 0; w <= full; ++w) {
    const int j = std::popcount(w);
    if (j > table.max_j) continue;
    // Cone test: a vertex of W lying in no nonface inside W.
    std::uint64_t covered = 0;
    for (auto g : gens)
      if ((g & w) == g) covered |= g;
    if (covered != w) continue;

    std::vector<std::uint64_t> faces;
    for (std::uint64_t f = w;; f = (f - 1) & w) {
      if (is_face[f]) faces.push_back(f);
      if (f == 0) break;
    }
    auto h = reduced_homology_of_faces(faces, ideal.field());
    for (std::size_t idx = 0; idx < h.size(); ++idx) {
      if (h[idx] == 0) continue;
      const int k = static_cast<int>(idx) - 1;  // homological dimension
      const int i = j - k - 1;
      if (i < 0 || i > table.max_i) continue;
      table.set(i, j, table.at(i, j) + h[idx]);
    }
  }
  return table;
}

}  // namespace bei
