#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "llyconn/graph.hpp"
#include "llyconn/rational.hpp"

namespace llyconn {

inline Graph empty_graph(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  return Graph(n, std::vector<Edge>{});
}

inline Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

inline Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

/// K_n without the matching {0,1}, {2,3}, ..., {2m-2, 2m-1}.
inline Graph complete_minus_matching(int n, int m) {
  if (n < 3) throw std::invalid_argument("complete_minus_matching needs n >= 3");
  if (m < 1 || m > n / 2)
    throw std::invalid_argument("matching size must lie in 1.." + std::to_string(n / 2) + ", got " + std::to_string(m));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!(u % 2 == 0 && v == u + 1 && v < 2 * m)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Vertices of g1 first, then g2 shifted by |V(g1)|.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int shift = g1.vertex_count();
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(shift + g2.vertex_count(), edges);
}

inline Graph join(const Graph& g1, const Graph& g2) {
  const int shift = g1.vertex_count();
  std::vector<Edge> edges = disjoint_union(g1, g2).edges();
  for (Vertex u = 0; u < shift; ++u)
    for (Vertex v = 0; v < g2.vertex_count(); ++v) edges.emplace_back(u, v + shift);
  return Graph(shift + g2.vertex_count(), edges);
}

/// 2K_n ∨ g: two disjoint copies of K_n joined to every vertex of g.
inline Graph two_kn_join(int n, const Graph& g) { return join(disjoint_union(complete(n), complete(n)), g); }

/// Vertex (a, b) is flattened to a * |V(g2)| + b.
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n1; ++a)
    for (auto [b, c] : g2.edges()) edges.emplace_back(a * n2 + b, a * n2 + c);
  for (auto [a, c] : g1.edges())
    for (Vertex b = 0; b < n2; ++b) edges.emplace_back(a * n2 + b, c * n2 + b);
  return Graph(n1 * n2, edges);
}

/// H(p, q): p-fold Cartesian power of K_q. Vertex index is the base-q
/// number whose digits (most significant first) are the coordinates.
inline Graph hamming(int p, int q) {
  if (p < 1 || q < 2) throw std::invalid_argument("hamming needs p >= 1 and q >= 2");
  Graph g = complete(q);
  for (int i = 1; i < p; ++i) g = cartesian_product(g, complete(q));
  return g;
}

/// Block sizes of the extremal construction on n vertices with connectivity k.
struct SharpExampleSpec {
  int n = 0, k = 0;
  int side = 0;    // |N_x| = |N_y| = |B| = (n-k-1)/2
  int common = 0;  // |A| = (3k-n-1)/2
};

inline SharpExampleSpec sharp_example_spec(int n, int k) {
  if ((n - k) % 2 == 0)
    throw std::invalid_argument("sharp example needs n - k odd; n - k = " + std::to_string(n - k));
  if (3 * k < n + 1) throw std::invalid_argument("sharp example needs k >= (n+1)/3");
  if (k > n - 1 || k < 1) throw std::invalid_argument("sharp example needs 1 <= k <= n - 1");
  return {n, k, (n - k - 1) / 2, (3 * k - n - 1) / 2};
}

struct SharpExample {
  Graph graph;
  Vertex x = 0, y = 1;
  SharpExampleSpec spec;
};

/// Vertices in block order x, y, N_x, N_y, A, B. The graph is complete
/// minus x–(B ∪ N_y), y–(B ∪ N_x) and all N_x–N_y pairs; for k = n - 1 it
/// is K_n.
inline SharpExample sharp_example(int n, int k) {
  auto spec = sharp_example_spec(n, k);
  if (k == n - 1) return {complete(n), 0, 1, spec};
  enum Block { X, Y, NX, NY, A, B };
  std::vector<Block> block{X, Y};
  for (int i = 0; i < spec.side; ++i) block.push_back(NX);
  for (int i = 0; i < spec.side; ++i) block.push_back(NY);
  for (int i = 0; i < spec.common; ++i) block.push_back(A);
  for (int i = 0; i < spec.side; ++i) block.push_back(B);
  auto removed = [](Block a, Block b) {
    if (a > b) std::swap(a, b);
    return (a == X && (b == B || b == NY)) || (a == Y && (b == B || b == NX)) || (a == NX && b == NY);
  };
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!removed(block[u], block[v])) edges.emplace_back(u, v);
  return {Graph(n, edges), 0, 1, spec};
}

/// Parameters (d, alpha, beta). beta is absent for graphs with no pair at
/// distance 2, where every beta fits.
struct AmplyRegularParams {
  int d = 0;
  int alpha = 0;
  std::optional<int> beta;

  friend bool operator==(const AmplyRegularParams&, const AmplyRegularParams&) = default;
};

/// Parameters if g is amply regular, nullopt otherwise. Graphs without
/// edges are reported as not amply regular.
inline std::optional<AmplyRegularParams> amply_regular_params(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("amply regularity is checked on connected graphs");
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  AmplyRegularParams params{g.degree(0), 0, std::nullopt};
  std::optional<int> alpha;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) != params.d) return std::nullopt;
    auto row = g.distances_from(u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (row[v] != 1 && row[v] != 2) continue;
      int common = common_neighbor_count(g, u, v);
      auto& slot = row[v] == 1 ? alpha : params.beta;
      if (slot && *slot != common) return std::nullopt;
      slot = common;
    }
  }
  if (!alpha) return std::nullopt;
  params.alpha = *alpha;
  return params;
}

/// True when g is d-regular, every edge has alpha common neighbours and
/// every distance-2 pair has beta (vacuous conditions hold).
inline bool satisfies_amply_regular(const Graph& g, int d, int alpha, int beta) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != d) return false;
    auto row = g.distances_from(u);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (row[v] == 1 && common_neighbor_count(g, u, v) != alpha) return false;
      if (row[v] == 2 && common_neighbor_count(g, u, v) != beta) return false;
    }
  }
  return true;
}

/// Erdős–Rényi G(n, p), resampled until connected. Each pair u < v (in
/// lexicographic order) is kept when a uniform draw from mt19937_64 falls
/// below p; the draw uses rejection so the result is exact and portable.
inline Graph random_connected(int n, const Rational& probability, std::uint64_t seed, int max_attempts = 10000) {
  if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
  if (probability <= 0 || probability > 1) throw std::invalid_argument("edge probability must lie in (0,1]");
  const auto num = static_cast<std::uint64_t>(to_int64(numerator(probability)));
  const auto den = static_cast<std::uint64_t>(to_int64(denominator(probability)));
  std::mt19937_64 rng(seed);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % den;
  auto coin = [&] {
    std::uint64_t draw;
    do draw = rng(); while (draw >= limit);
    return draw % den < num;
  };
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin()) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("no connected sample after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace llyconn
