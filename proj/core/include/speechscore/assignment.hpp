#pragma once

#include <cstdint>
#include <vector>

namespace speechscore {

// Maximum-weight one-to-one assignment on a rectangular weight matrix
// (rows x cols, weights >= 0). Returns col index per row, -1 for
// unassigned. Pairs with zero weight are never part of the result.
std::vector<int> max_weight_assignment(
    const std::vector<std::vector<std::int64_t>>& weights);

// Total weight of an optimal assignment.
std::int64_t max_weight_assignment_value(
    const std::vector<std::vector<std::int64_t>>& weights);

}  // namespace speechscore
