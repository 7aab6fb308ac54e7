#pragma once

// Exact sparse Gaussian elimination for square systems.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "honeycomb/rational.hpp"

namespace honeycomb {

using SparseRow = std::vector<std::pair<std::size_t, Rat>>;

/// Solves rows * x = rhs for x in Q^dim. Returns nullopt unless the system has
/// exactly dim rows and a unique solution.
std::optional<std::vector<Rat>> solve_square(const std::vector<SparseRow>& rows, const std::vector<Rat>& rhs,
                                             std::size_t dim);

/// Rank of the given rows over Q^dim.
std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t dim);

}  // namespace honeycomb
