#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace llyconn {

struct Assignment {
  std::vector<int> column_of_row;  // a permutation of 0..n-1
  std::int64_t cost = 0;
};

/// Minimum-cost perfect assignment on a square integer cost matrix
/// (Hungarian method with row/column potentials, O(n^3)).
inline Assignment min_cost_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
  const int n = static_cast<int>(cost.size());
  for (const auto& row : cost)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("assignment cost matrix must be square");
  Assignment result;
  if (n == 0) return result;

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  // 1-based potentials; column 0 is a virtual start column.
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> row_of_col(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    row_of_col[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = row_of_col[j0], j1 = 0;
      std::int64_t delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        std::int64_t reduced = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      int j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  result.column_of_row.assign(n, -1);
  for (int j = 1; j <= n; ++j) result.column_of_row[row_of_col[j] - 1] = j - 1;
  for (int i = 0; i < n; ++i) result.cost += cost[i][result.column_of_row[i]];
  return result;
}

}  // namespace llyconn
