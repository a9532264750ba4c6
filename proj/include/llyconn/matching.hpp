#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "llyconn/graph.hpp"

namespace llyconn {

/// Maximum matching of a bipartite instance together with a König cover.
struct MatchingResult {
  std::vector<Edge> edges;     // (left, right) pairs
  std::vector<Vertex> cover;   // sorted; meets every allowed pair
  int deficiency = 0;          // |left| - |edges|

  std::size_t size() const { return edges.size(); }
};

/// Hopcroft–Karp on the instance (left, right, pairs). The cover is read off
/// the alternating-reachability set Z of unmatched left vertices:
/// (left \ Z) ∪ (right ∩ Z).
inline MatchingResult max_bipartite_matching(const std::vector<Vertex>& left, const std::vector<Vertex>& right,
                                             const std::vector<Edge>& pairs) {
  std::unordered_map<Vertex, int> left_index, right_index;
  for (std::size_t i = 0; i < left.size(); ++i)
    if (!left_index.emplace(left[i], static_cast<int>(i)).second)
      throw std::invalid_argument("vertex " + std::to_string(left[i]) + " repeated on the left side");
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (left_index.contains(right[j]))
      throw std::invalid_argument("vertex " + std::to_string(right[j]) + " is on both sides");
    if (!right_index.emplace(right[j], static_cast<int>(j)).second)
      throw std::invalid_argument("vertex " + std::to_string(right[j]) + " repeated on the right side");
  }

  const int nl = static_cast<int>(left.size()), nr = static_cast<int>(right.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nl));
  for (auto [a, b] : pairs) {
    auto ia = left_index.find(a);
    auto ib = right_index.find(b);
    if (ia == left_index.end() || ib == right_index.end())
      throw std::invalid_argument("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") does not join left to right");
    adj[ia->second].push_back(ib->second);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }

  constexpr int kFree = -1;
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> mate_left(static_cast<std::size_t>(nl), kFree), mate_right(static_cast<std::size_t>(nr), kFree);
  std::vector<int> layer(static_cast<std::size_t>(nl));

  auto bfs = [&] {
    std::queue<int> queue;
    bool found = false;
    for (int u = 0; u < nl; ++u) {
      layer[u] = mate_left[u] == kFree ? 0 : kInf;
      if (layer[u] == 0) queue.push(u);
    }
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int v : adj[u]) {
        int w = mate_right[v];
        if (w == kFree) found = true;
        else if (layer[w] == kInf) {
          layer[w] = layer[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, int u) -> bool {
    for (int v : adj[u]) {
      int w = mate_right[v];
      if (w == kFree || (layer[w] == layer[u] + 1 && self(self, w))) {
        mate_left[u] = v;
        mate_right[v] = u;
        return true;
      }
    }
    layer[u] = kInf;
    return false;
  };

  while (bfs())
    for (int u = 0; u < nl; ++u)
      if (mate_left[u] == kFree) dfs(dfs, u);

  // Alternating reachability from free left vertices.
  std::vector<bool> seen_left(static_cast<std::size_t>(nl)), seen_right(static_cast<std::size_t>(nr));
  std::queue<int> queue;
  for (int u = 0; u < nl; ++u)
    if (mate_left[u] == kFree) {
      seen_left[u] = true;
      queue.push(u);
    }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int v : adj[u]) {
      if (seen_right[v] || mate_left[u] == v) continue;
      seen_right[v] = true;
      int w = mate_right[v];
      if (w != kFree && !seen_left[w]) {
        seen_left[w] = true;
        queue.push(w);
      }
    }
  }

  MatchingResult result;
  for (int u = 0; u < nl; ++u) {
    if (mate_left[u] != kFree) result.edges.emplace_back(left[u], right[mate_left[u]]);
    if (!seen_left[u]) result.cover.push_back(left[u]);
  }
  for (int v = 0; v < nr; ++v)
    if (seen_right[v]) result.cover.push_back(right[v]);
  std::sort(result.edges.begin(), result.edges.end());
  std::sort(result.cover.begin(), result.cover.end());
  result.deficiency = nl - static_cast<int>(result.edges.size());
  return result;
}

}  // namespace llyconn
