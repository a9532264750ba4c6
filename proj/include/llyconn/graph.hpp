#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace llyconn {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sentinel stored in distance rows for pairs in different components.
inline constexpr int kUnreachable = -1;

/// Immutable finite simple undirected graph on vertices 0..n-1.
///
/// Distances are computed lazily, one BFS per source, and cached behind a
/// shared table; copies of a Graph share the cache. Concurrent readers are
/// safe: each row is filled exactly once under its own once_flag.
class Graph {
 public:
  Graph() : Graph(0, {}) {}

  /// Throws std::invalid_argument on self-loops, duplicate edges, or
  /// out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges) : n_(checked_count(n)), adjacency_(static_cast<std::size_t>(n)) {
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") has an endpoint outside 0.." + std::to_string(n - 1));
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i] == edges_[i - 1])
        throw std::invalid_argument("duplicate edge (" + std::to_string(edges_[i].first) + "," +
                                    std::to_string(edges_[i].second) + ")");
    cache_ = std::make_shared<DistanceCache>(n);
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
  Graph(int n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  bool valid(Vertex v) const { return v >= 0 && v < n_; }

  /// Hop distances from `source`; kUnreachable marks other components.
  std::span<const int> distances_from(Vertex source) const {
    if (!valid(source)) throw std::out_of_range("vertex " + std::to_string(source) + " out of range");
    auto s = static_cast<std::size_t>(source);
    std::call_once(cache_->once[s], [&] { cache_->rows[s] = bfs(source); });
    return cache_->rows[s];
  }

  /// Shortest-path length, or nullopt when u and v lie in different components.
  std::optional<int> distance(Vertex u, Vertex v) const {
    if (!valid(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    int d = distances_from(u)[static_cast<std::size_t>(v)];
    if (d == kUnreachable) return std::nullopt;
    return d;
  }

 private:
  static int checked_count(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    return n;
  }

  struct DistanceCache {
    explicit DistanceCache(int n) : once(static_cast<std::size_t>(n)), rows(static_cast<std::size_t>(n)) {}
    std::vector<std::once_flag> once;
    std::vector<std::vector<int>> rows;
  };

  std::vector<int> bfs(Vertex source) const {
    std::vector<int> dist(static_cast<std::size_t>(n_), kUnreachable);
    std::queue<Vertex> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : adjacency_[u])
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          queue.push(w);
        }
    }
    return dist;
  }

  int n_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::shared_ptr<DistanceCache> cache_;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

inline std::optional<int> distance(const Graph& g, Vertex u, Vertex v) { return g.distance(u, v); }

/// Largest finite distance, or nullopt when the graph is disconnected.
/// The empty graph and K_1 have diameter 0.
inline std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (int d : g.distances_from(u)) {
      if (d == kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  return best;
}

inline bool is_connected(const Graph& g) { return g.vertex_count() == 0 || diameter(g).has_value(); }

inline int min_degree(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  int best = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

inline int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

inline bool is_complete(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != g.vertex_count() - 1) return false;
  return true;
}

inline int common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
  auto a = g.neighbors(u), b = g.neighbors(v);
  int count = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

/// Connected components of the subgraph induced on vertices not in `removed`.
/// Each component is sorted; components are ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> components(const Graph& g, const std::vector<bool>& removed = {}) {
  const int n = g.vertex_count();
  auto is_removed = [&](Vertex v) { return !removed.empty() && removed[v]; };
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex s = 0; s < n; ++s) {
    if (is_removed(s) || label[s] != -1) continue;
    std::vector<Vertex> part{s};
    label[s] = static_cast<int>(parts.size());
    for (std::size_t i = 0; i < part.size(); ++i)
      for (Vertex w : g.neighbors(part[i]))
        if (!is_removed(w) && label[w] == -1) {
          label[w] = label[s];
          part.push_back(w);
        }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

/// Partition of V around an edge xy: common neighbors, private neighbors of
/// each endpoint, and everything at distance >= 2 from both.
struct EdgeNeighborhoodSplit {
  Vertex x = 0, y = 0;
  std::vector<Vertex> common;
  std::vector<Vertex> nx;
  std::vector<Vertex> ny;
  std::vector<Vertex> outside;
};

inline EdgeNeighborhoodSplit edge_split(const Graph& g, Vertex x, Vertex y) {
  if (!g.valid(x) || !g.valid(y) || !g.adjacent(x, y))
    throw std::invalid_argument("edge_split requires adjacent vertices, got (" + std::to_string(x) + "," +
                                std::to_string(y) + ")");
  EdgeNeighborhoodSplit split{x, y, {}, {}, {}, {}};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == x || v == y) continue;
    bool near_x = g.adjacent(x, v), near_y = g.adjacent(y, v);
    if (near_x && near_y) split.common.push_back(v);
    else if (near_x) split.nx.push_back(v);
    else if (near_y) split.ny.push_back(v);
    else split.outside.push_back(v);
  }
  return split;
}

}  // namespace llyconn
