#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "llyconn/graph.hpp"
#include "llyconn/max_flow.hpp"

namespace llyconn {

/// Connectivity value with a minimum separator (vertex version) or a
/// minimum cut (edge version), and the parts left after removing it.
struct ConnectivityWitness {
  int value = 0;
  std::vector<Vertex> separator;  // vertex connectivity only
  std::vector<Edge> cut;          // edge connectivity only
  std::vector<std::vector<Vertex>> components;
};

namespace detail {

struct LocalCut {
  int value;
  std::vector<Vertex> separator;
};

/// Minimum number of vertices separating non-adjacent a and b (Menger),
/// through the split network v_in = 2v -> v_out = 2v+1.
inline LocalCut local_vertex_cut(const Graph& g, Vertex a, Vertex b) {
  const int n = g.vertex_count();
  MaxFlow flow(2 * n);
  for (Vertex v = 0; v < n; ++v) flow.add_arc(2 * v, 2 * v + 1, (v == a || v == b) ? MaxFlow::kInfinite : 1);
  for (auto [u, v] : g.edges()) {
    flow.add_arc(2 * u + 1, 2 * v, MaxFlow::kInfinite);
    flow.add_arc(2 * v + 1, 2 * u, MaxFlow::kInfinite);
  }
  LocalCut cut{flow.run(2 * a + 1, 2 * b), {}};
  auto seen = flow.reachable(2 * a + 1);
  for (Vertex v = 0; v < n; ++v)
    if (seen[2 * v] && !seen[2 * v + 1]) cut.separator.push_back(v);
  return cut;
}

}  // namespace detail

/// k(G): n-1 for complete graphs (empty separator), 0 for disconnected
/// graphs, otherwise the size of a minimum separator found by max-flow.
///
/// With s of minimum degree, a minimum separator S either misses s, and then
/// some t outside N[s] is cut from s, or contains s, and then s has
/// neighbours in two components of G - S that S separates. So the minimum of
/// the local cuts (s, t) for t not in N[s] and (u, w) for non-adjacent
/// u, w in N(s) is k(G).
inline ConnectivityWitness vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  ConnectivityWitness w;
  if (is_complete(g)) {
    w.value = std::max(n - 1, 0);
    w.components = components(g);
    return w;
  }
  if (!is_connected(g)) {
    w.components = components(g);
    return w;
  }

  Vertex s = 0;
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(s)) s = v;
  std::optional<detail::LocalCut> best;
  auto consider = [&](Vertex a, Vertex b) {
    auto cut = detail::local_vertex_cut(g, a, b);
    if (!best || cut.value < best->value) best = std::move(cut);
  };
  for (Vertex t = 0; t < n; ++t)
    if (t != s && !g.adjacent(s, t)) consider(s, t);
  auto around = g.neighbors(s);
  for (std::size_t i = 0; i < around.size(); ++i)
    for (std::size_t j = i + 1; j < around.size(); ++j)
      if (!g.adjacent(around[i], around[j])) consider(around[i], around[j]);

  w.value = best->value;
  w.separator = best->separator;
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  for (Vertex v : w.separator) removed[v] = true;
  w.components = components(g, removed);
  return w;
}

/// k'(G): 0 for K_1 and disconnected graphs; otherwise the minimum over
/// t != 0 of the max-flow from vertex 0 to t with unit edge capacities.
/// `components` holds the two sides X, V \ X of the returned cut.
inline ConnectivityWitness edge_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  ConnectivityWitness w;
  if (n <= 1 || !is_connected(g)) {
    w.components = components(g);
    return w;
  }
  std::optional<int> best;
  std::vector<bool> best_side;
  for (Vertex t = 1; t < n; ++t) {
    MaxFlow flow(n);
    for (auto [u, v] : g.edges()) {
      flow.add_arc(u, v, 1);
      flow.add_arc(v, u, 1);
    }
    int value = flow.run(0, t);
    if (!best || value < *best) {
      best = value;
      best_side = flow.reachable(0);
    }
  }
  w.value = *best;
  std::vector<Vertex> inside, outside;
  for (Vertex v = 0; v < n; ++v) (best_side[v] ? inside : outside).push_back(v);
  for (auto [u, v] : g.edges())
    if (best_side[u] != best_side[v]) w.cut.emplace_back(u, v);
  w.components = {inside, outside};
  return w;
}

}  // namespace llyconn
