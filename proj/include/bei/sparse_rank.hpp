#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bei/field.hpp"

namespace bei {

/// (column, value) pairs sorted by column, values nonzero in [0, p).
using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Rank over F_p by sparse Gaussian elimination. Columns are reordered by
/// increasing occupancy and rows processed from sparsest to densest, which
/// keeps fill-in low on the very sparse matrices the engines produce.
std::size_t sparse_rank(std::vector<SparseRow> rows, std::uint32_t num_cols,
                        const PrimeField& field);

}  // namespace bei
