#include "bei/sparse_rank.hpp"

#include <algorithm>
#include <numeric>

namespace bei {

namespace {

// row -= factor * pivot, both sorted by column.
void eliminate(SparseRow& row, std::uint32_t factor, const SparseRow& pivot,
               const PrimeField& field, SparseRow& scratch) {
  scratch.clear();
  const std::uint32_t neg = field.neg(factor);
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      scratch.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      scratch.emplace_back(b->first, field.mul(neg, b->second));
      ++b;
    } else {
      std::uint32_t v = field.add(a->second, field.mul(neg, b->second));
      if (v != 0) scratch.emplace_back(a->first, v);
      ++a;
      ++b;
    }
  }
  row.swap(scratch);
}

}  // namespace

std::size_t sparse_rank(std::vector<SparseRow> rows, std::uint32_t num_cols,
                        const PrimeField& field) {
  if (rows.empty() || num_cols == 0) return 0;

  std::vector<std::uint32_t> count(num_cols, 0);
  for (const auto& r : rows)
    for (const auto& [c, v] : r) ++count[c];
  std::vector<std::uint32_t> order(num_cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t x, std::uint32_t y) { return count[x] < count[y]; });
  std::vector<std::uint32_t> rank_of(num_cols);
  for (std::uint32_t k = 0; k < num_cols; ++k) rank_of[order[k]] = k;
  for (auto& r : rows) {
    for (auto& e : r) e.first = rank_of[e.first];
    std::sort(r.begin(), r.end());
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseRow& x, const SparseRow& y) { return x.size() < y.size(); });

  std::vector<std::int32_t> pivot_of(num_cols, -1);
  std::vector<SparseRow> pivots;
  SparseRow scratch;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto [lead, value] = row.front();
      std::int32_t p = pivot_of[lead];
      if (p < 0) {
        std::uint32_t inv = field.inv(value);
        for (auto& e : row) e.second = field.mul(e.second, inv);
        pivot_of[lead] = static_cast<std::int32_t>(pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      eliminate(row, value, pivots[p], field, scratch);
    }
  }
  return pivots.size();
}

}  // namespace bei
