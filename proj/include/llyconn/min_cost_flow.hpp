#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace llyconn {

/// Balanced integer transportation problem: ship supply[i] out of every row
/// and demand[j] into every column along allowed arcs (i, j) of unit cost
/// cost[i][j]. An empty `allowed` matrix allows every arc.
struct TransportationInstance {
  std::vector<std::int64_t> supply;
  std::vector<std::int64_t> demand;
  std::vector<std::vector<std::int64_t>> cost;
  std::vector<std::vector<bool>> allowed;

  bool is_allowed(std::size_t i, std::size_t j) const { return allowed.empty() || allowed[i][j]; }
};

/// Optimal flow plus potentials with row[i] - column[j] <= cost[i][j] on every
/// allowed arc, tight wherever flow[i][j] > 0.
struct TransportationSolution {
  std::vector<std::vector<std::int64_t>> flow;
  std::int64_t cost = 0;
  std::vector<std::int64_t> row_potential;
  std::vector<std::int64_t> column_potential;
};

class InfeasibleTransport : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Successive shortest paths. Each round runs Bellman–Ford on the residual
/// network s -> rows -> columns -> t, so reverse arcs with negative cost need
/// no special handling; the residual network never has a negative cycle.
inline TransportationSolution solve_transportation(const TransportationInstance& instance) {
  const std::size_t rows = instance.supply.size(), cols = instance.demand.size();
  std::int64_t total_supply = 0, total_demand = 0;
  for (auto s : instance.supply) {
    if (s < 0) throw std::invalid_argument("negative supply");
    total_supply += s;
  }
  for (auto d : instance.demand) {
    if (d < 0) throw std::invalid_argument("negative demand");
    total_demand += d;
  }
  if (total_supply != total_demand) throw std::invalid_argument("unbalanced transportation instance");

  TransportationSolution solution;
  solution.flow.assign(rows, std::vector<std::int64_t>(cols, 0));
  std::vector<std::int64_t> supply_left = instance.supply, demand_left = instance.demand;

  // Node ids: 0 source, 1..rows, rows+1..rows+cols, rows+cols+1 sink.
  const std::size_t source = 0, sink = rows + cols + 1, nodes = rows + cols + 2;
  auto row_node = [](std::size_t i) { return i + 1; };
  auto col_node = [&](std::size_t j) { return rows + 1 + j; };
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  std::int64_t shipped = 0;
  while (shipped < total_supply) {
    std::vector<std::int64_t> dist(nodes, kInf);
    std::vector<std::size_t> parent(nodes, nodes);
    dist[source] = 0;
    for (std::size_t round = 0; round < nodes; ++round) {
      bool changed = false;
      auto relax = [&](std::size_t from, std::size_t to, std::int64_t c) {
        if (dist[from] < kInf && dist[from] + c < dist[to]) {
          dist[to] = dist[from] + c;
          parent[to] = from;
          changed = true;
        }
      };
      for (std::size_t i = 0; i < rows; ++i)
        if (supply_left[i] > 0) relax(source, row_node(i), 0);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          if (instance.is_allowed(i, j)) relax(row_node(i), col_node(j), instance.cost[i][j]);
          if (solution.flow[i][j] > 0) relax(col_node(j), row_node(i), -instance.cost[i][j]);
        }
      for (std::size_t j = 0; j < cols; ++j)
        if (demand_left[j] > 0) relax(col_node(j), sink, 0);
      if (!changed) break;
    }
    if (dist[sink] >= kInf) throw InfeasibleTransport("no feasible transport plan on the allowed arcs");

    // Walk the path back, computing the bottleneck.
    std::vector<std::size_t> path{sink};
    while (path.back() != source) path.push_back(parent[path.back()]);
    std::int64_t push = std::min(supply_left[path[path.size() - 2] - 1], demand_left[path[1] - rows - 1]);
    for (std::size_t k = 1; k + 2 < path.size(); ++k) {
      std::size_t to = path[k], from = path[k + 1];
      if (from > rows)  // column -> row: cancels flow on (to, from)
        push = std::min(push, solution.flow[to - 1][from - rows - 1]);
    }
    for (std::size_t k = 1; k + 2 < path.size(); ++k) {
      std::size_t to = path[k], from = path[k + 1];
      if (from > rows) solution.flow[to - 1][from - rows - 1] -= push;
      else solution.flow[from - 1][to - rows - 1] += push;
    }
    supply_left[path[path.size() - 2] - 1] -= push;
    demand_left[path[1] - rows - 1] -= push;
    shipped += push;
  }

  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) solution.cost += solution.flow[i][j] * instance.cost[i][j];

  // Potentials: shortest distances in the final residual network from a
  // virtual root attached to every node at cost 0.
  std::vector<std::int64_t> dist(rows + cols, 0);
  for (std::size_t round = 0; round <= rows + cols; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (instance.is_allowed(i, j) && dist[i] + instance.cost[i][j] < dist[rows + j]) {
          dist[rows + j] = dist[i] + instance.cost[i][j];
          changed = true;
        }
        if (solution.flow[i][j] > 0 && dist[rows + j] - instance.cost[i][j] < dist[i]) {
          dist[i] = dist[rows + j] - instance.cost[i][j];
          changed = true;
        }
      }
    if (!changed) break;
  }
  solution.row_potential.resize(rows);
  solution.column_potential.resize(cols);
  for (std::size_t i = 0; i < rows; ++i) solution.row_potential[i] = -dist[i];
  for (std::size_t j = 0; j < cols; ++j) solution.column_potential[j] = -dist[rows + j];
  return solution;
}

}  // namespace llyconn
