#include "bei/homology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "bei/errors.hpp"

namespace bei {

std::size_t dense_rank(std::vector<std::vector<std::uint32_t>> rows, const PrimeField& field) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint32_t inv = field.inv(rows[rank][c]);
    for (std::size_t k = c; k < cols; ++k) rows[rank][k] = field.mul(rows[rank][k], inv);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      std::uint32_t f = rows[r][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = field.sub(rows[r][k], field.mul(f, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

std::vector<std::uint64_t> face_counts(const std::vector<std::uint64_t>& faces) {
  std::vector<std::uint64_t> counts;
  for (auto f : faces) {
    std::size_t k = static_cast<std::size_t>(std::popcount(f));
    if (counts.size() <= k) counts.resize(k + 1, 0);
    ++counts[k];
  }
  return counts;
}

std::vector<std::uint64_t> reduced_homology_of_faces(const std::vector<std::uint64_t>& faces,
                                                     const PrimeField& field) {
  if (faces.empty()) return {};
  // by_size[s] = faces with s vertices, i.e. dimension s - 1.
  std::vector<std::vector<std::uint64_t>> by_size;
  for (auto f : faces) {
    std::size_t s = static_cast<std::size_t>(std::popcount(f));
    if (by_size.size() <= s) by_size.resize(s + 1);
    by_size[s].push_back(f);
  }
  for (auto& v : by_size) std::sort(v.begin(), v.end());

  // rank_boundary[s] = rank of the map from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> rank_boundary(by_size.size() + 1, 0);
  for (std::size_t s = 1; s < by_size.size(); ++s) {
    const auto& lower = by_size[s - 1];
    if (by_size[s].empty() || lower.empty()) continue;
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t k = 0; k < lower.size(); ++k) index[lower[k]] = k;
    std::vector<std::vector<std::uint32_t>> rows;
    for (auto f : by_size[s]) {
      std::vector<std::uint32_t> row(lower.size(), 0);
      int position = 0;
      for (std::uint64_t rest = f; rest; rest &= rest - 1, ++position) {
        std::uint64_t bit = rest & (~rest + 1);
        auto it = index.find(f & ~bit);
        if (it == index.end()) throw InputError("face list is not closed under subsets");
        row[it->second] = position % 2 == 0 ? 1 : field.neg(1);
      }
      rows.push_back(std::move(row));
    }
    rank_boundary[s] = dense_rank(std::move(rows), field);
  }

  std::vector<std::uint64_t> out(by_size.size(), 0);
  for (std::size_t s = 0; s < by_size.size(); ++s) {
    out[s] = by_size[s].size() - rank_boundary[s] - rank_boundary[s + 1];
  }
  return out;
}

std::vector<std::uint64_t> faces_of(const SimplicialComplexRepr& c) {
  if (c.is_void) return {};
  std::vector<std::uint64_t> faces{0};
  for (const auto& facet : c.facets) {
    for (int v : facet)
      if (v < 1 || v > c.num_vertices) throw InputError("facet vertex out of range");
    std::uint64_t m = vertices_to_mask(facet);
    for (std::uint64_t sub = m; sub; sub = (sub - 1) & m) faces.push_back(sub);
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

std::vector<std::uint64_t> simplicial_reduced_homology(const SimplicialComplexRepr& c,
                                                       const PrimeField& field) {
  return reduced_homology_of_faces(faces_of(c), field);
}

}  // namespace bei
