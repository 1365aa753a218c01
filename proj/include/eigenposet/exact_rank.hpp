#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace eigenposet {

// Sparse integer row: (column, value) pairs with strictly increasing columns.
using SparseRow = std::vector<std::pair<int, std::int64_t>>;

// Rank over Q by fraction-free elimination.  Runs in 64-bit arithmetic and
// restarts with arbitrary precision if an intermediate value overflows.
std::size_t exact_rank(const std::vector<SparseRow>& rows);

}  // namespace eigenposet
