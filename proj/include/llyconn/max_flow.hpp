#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace llyconn {

/// Dinic's algorithm on a small integer-capacity network.
class MaxFlow {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 2;

  explicit MaxFlow(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  void add_arc(int from, int to, int capacity) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, capacity});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  int run(int source, int sink) {
    int total = 0;
    while (levels(source, sink)) {
      next_.assign(adj_.size(), 0);
      while (int pushed = augment(source, sink, kInfinite)) total += pushed;
    }
    return total;
  }

  /// Nodes reachable from `source` in the residual network (valid after run).
  std::vector<bool> reachable(int source) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<int> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int id : adj_[u])
        if (arcs_[id].capacity > 0 && !seen[arcs_[id].to]) {
          seen[arcs_[id].to] = true;
          stack.push_back(arcs_[id].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int capacity;
  };

  bool levels(int source, int sink) {
    level_.assign(adj_.size(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int id : adj_[u])
        if (arcs_[id].capacity > 0 && level_[arcs_[id].to] < 0) {
          level_[arcs_[id].to] = level_[u] + 1;
          queue.push(arcs_[id].to);
        }
    }
    return level_[sink] >= 0;
  }

  int augment(int u, int sink, int limit) {
    if (u == sink) return limit;
    for (auto& i = next_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      int id = adj_[u][i];
      Arc& arc = arcs_[id];
      if (arc.capacity <= 0 || level_[arc.to] != level_[u] + 1) continue;
      if (int pushed = augment(arc.to, sink, std::min(limit, arc.capacity))) {
        arc.capacity -= pushed;
        arcs_[id ^ 1].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_, next_;
};

}  // namespace llyconn
