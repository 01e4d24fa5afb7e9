#include "speechscore/assignment.hpp"

#include <algorithm>
#include <limits>

namespace speechscore {

namespace {

// Kuhn-Munkres on a square cost matrix (minimization), the classic
// potential formulation. Returns rowsol: column assigned to each row.
std::vector<int> solve_square_min(const std::vector<std::vector<std::int64_t>>& cost) {
    const int n = static_cast<int>(cost.size());
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = 0;
            std::int64_t delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) { minv[j] = cur; way[j] = j0; }
                if (minv[j] < delta) { delta = minv[j]; j1 = j; }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) { u[p[j]] += delta; v[j] -= delta; }
                else minv[j] -= delta;
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    std::vector<int> rowsol(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] > 0) rowsol[p[j] - 1] = j - 1;
    return rowsol;
}

}  // namespace

std::vector<int> max_weight_assignment(
    const std::vector<std::vector<std::int64_t>>& weights) {
    const int rows = static_cast<int>(weights.size());
    const int cols = rows ? static_cast<int>(weights[0].size()) : 0;
    if (rows == 0 || cols == 0) return std::vector<int>(rows, -1);

    // Pad to square and negate: maximization becomes minimization with
    // non-negative entries after shifting by the largest weight.
    const int n = std::max(rows, cols);
    std::int64_t wmax = 0;
    for (const auto& row : weights)
        for (std::int64_t w : row) wmax = std::max(wmax, w);

    std::vector<std::vector<std::int64_t>> cost(
        n, std::vector<std::int64_t>(n, wmax));  // dummy cells carry weight 0
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) cost[r][c] = wmax - weights[r][c];

    std::vector<int> rowsol = solve_square_min(cost);
    rowsol.resize(rows);
    for (int r = 0; r < rows; ++r)
        if (rowsol[r] >= cols || (rowsol[r] >= 0 && weights[r][rowsol[r]] == 0))
            rowsol[r] = -1;
    return rowsol;
}

std::int64_t max_weight_assignment_value(
    const std::vector<std::vector<std::int64_t>>& weights) {
    std::vector<int> sol = max_weight_assignment(weights);
    std::int64_t total = 0;
    for (std::size_t r = 0; r < sol.size(); ++r)
        if (sol[r] >= 0) total += weights[r][sol[r]];
    return total;
}

}  // namespace speechscore
