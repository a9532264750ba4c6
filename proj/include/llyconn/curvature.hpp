#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "llyconn/assignment.hpp"
#include "llyconn/graph.hpp"
#include "llyconn/matching.hpp"
#include "llyconn/rational.hpp"
#include "llyconn/transport.hpp"

namespace llyconn {

enum class CurvatureMethod { FlowLimit, EqualDegreeAssignment, MatchingBound };

inline std::string to_string(CurvatureMethod m) {
  switch (m) {
    case CurvatureMethod::FlowLimit: return "flow-limit";
    case CurvatureMethod::EqualDegreeAssignment: return "equal-degree-assignment";
    case CurvatureMethod::MatchingBound: return "matching-bound";
  }
  return "unknown";
}

struct CurvatureValue {
  Vertex x = 0, y = 0;
  Rational value;
  CurvatureMethod method = CurvatureMethod::FlowLimit;
};

namespace detail {

inline int checked_distance(const Graph& g, Vertex x, Vertex y) {
  if (!g.valid(x) || !g.valid(y)) throw std::invalid_argument("vertex out of range");
  if (x == y) throw std::invalid_argument("curvature needs two distinct vertices");
  auto d = g.distance(x, y);
  if (!d) throw std::domain_error("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                                  " lie in different components");
  return *d;
}

}  // namespace detail

/// kappa_p(x,y) = 1 - W(mu_x^p, mu_y^p) / d(x,y).
inline Rational kappa_p(const Graph& g, Vertex x, Vertex y, const Rational& p) {
  int d = detail::checked_distance(g, x, y);
  auto w = wasserstein(g, vertex_measure(g, x, p), vertex_measure(g, y, p));
  return 1 - w.value / d;
}

/// kappa_p(x,y) / (1 - p) for p < 1.
inline Rational lly_probe(const Graph& g, Vertex x, Vertex y, const Rational& p) {
  if (p >= 1) throw std::invalid_argument("probe point must satisfy p < 1");
  return kappa_p(g, x, y, p) / (1 - p);
}

/// First probe point 1/(1 + max(d_x, d_y)).
inline Rational lly_start_point(const Graph& g, Vertex x, Vertex y) {
  return Rational(1, 1 + std::max(g.degree(x), g.degree(y)));
}

/// Exact Lin-Lu-Yau curvature, lim_{p->1} kappa_p / (1-p).
///
/// W(mu_x^p, mu_y^p) is convex and piecewise linear in p with W(1) = d(x,y),
/// so the probe kappa_p/(1-p) is nondecreasing in p, and two equal probes
/// mean W is affine from the first of them up to p = 1. Probes start at
/// 1/(1+max degree) and move halfway to 1 until two consecutive ones agree.
inline CurvatureValue lly_curvature(const Graph& g, Vertex x, Vertex y) {
  detail::checked_distance(g, x, y);
  Rational p = lly_start_point(g, x, y);
  Rational previous = lly_probe(g, x, y, p);
  for (int step = 0; step < 64; ++step) {
    p = (1 + p) / 2;
    Rational current = lly_probe(g, x, y, p);
    if (current == previous) return {x, y, current, CurvatureMethod::FlowLimit};
    previous = std::move(current);
  }
  throw std::runtime_error("curvature probes did not stabilise for pair (" + std::to_string(x) + "," +
                           std::to_string(y) + ")");
}

struct AssignmentResult {
  std::vector<Edge> bijection;  // (v, phi(v)) for v in N_x
  int total_cost = 0;
};

/// Curvature of an edge whose endpoints share degree d:
/// (d + 1 - min_phi sum d(v, phi(v))) / d over bijections N_x -> N_y.
inline std::pair<CurvatureValue, AssignmentResult> lly_equal_degree(const Graph& g, Vertex x, Vertex y) {
  auto split = edge_split(g, x, y);
  const int d = g.degree(x);
  if (g.degree(y) != d)
    throw std::invalid_argument("equal-degree formula needs d_x = d_y, got " + std::to_string(d) + " and " +
                                std::to_string(g.degree(y)));
  std::vector<std::vector<std::int64_t>> cost;
  for (Vertex u : split.nx) {
    auto row = g.distances_from(u);
    std::vector<std::int64_t> line;
    for (Vertex v : split.ny) line.push_back(row[v]);
    cost.push_back(std::move(line));
  }
  auto assignment = min_cost_assignment(cost);
  AssignmentResult result;
  for (std::size_t i = 0; i < split.nx.size(); ++i)
    result.bijection.emplace_back(split.nx[i], split.ny[assignment.column_of_row[i]]);
  result.total_cost = static_cast<int>(assignment.cost);
  Rational value = Rational(d + 1 - result.total_cost, d);
  return {{x, y, value, CurvatureMethod::EqualDegreeAssignment}, result};
}

/// Curvature of every edge (u < v), in edge order.
inline std::vector<CurvatureValue> edge_curvatures(const Graph& g) {
  std::vector<CurvatureValue> out;
  out.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) out.push_back(lly_curvature(g, u, v));
  return out;
}

/// Minimum curvature over pairs at distance exactly `scale`, with the
/// minimising pair; nullopt when no pair realises that distance.
inline std::optional<CurvatureValue> curvature_at_scale(const Graph& g, int scale) {
  if (scale < 1) throw std::invalid_argument("scale must be positive");
  std::optional<CurvatureValue> best;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto row = g.distances_from(u);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (row[v] != scale) continue;
      auto c = lly_curvature(g, u, v);
      if (!best || c.value < best->value) best = std::move(c);
    }
  }
  return best;
}

/// Lower bound on kappa(x,y) from a maximum matching between N_x and N_y,
/// oriented so that d_x >= d_y.
struct MatchingBoundCertificate {
  Vertex x = 0, y = 0;
  EdgeNeighborhoodSplit split;
  MatchingResult matching;
  int L = 0;  // |M| + |A| - |N_x|
  Rational bound;  // (L + 2) / d_x
};

inline MatchingBoundCertificate matching_transport_bound(const Graph& g, Vertex x, Vertex y) {
  if (!g.valid(x) || !g.valid(y) || !g.adjacent(x, y))
    throw std::invalid_argument("matching bound needs an edge");
  auto diam = diameter(g);
  if (!diam || *diam > 2) throw std::domain_error("matching bound needs a graph of diameter at most 2");
  if (g.degree(x) < g.degree(y)) std::swap(x, y);

  MatchingBoundCertificate cert;
  cert.x = x;
  cert.y = y;
  cert.split = edge_split(g, x, y);
  std::vector<Edge> pairs;
  for (Vertex u : cert.split.nx)
    for (Vertex v : cert.split.ny)
      if (g.adjacent(u, v)) pairs.emplace_back(u, v);
  cert.matching = max_bipartite_matching(cert.split.nx, cert.split.ny, pairs);
  cert.L = static_cast<int>(cert.matching.size() + cert.split.common.size()) - static_cast<int>(cert.split.nx.size());
  cert.bound = Rational(cert.L + 2, g.degree(x));
  return cert;
}

/// The partial plan pi_p behind the certificate, for 1/(1+d_y) <= p < 1:
///   (x,y) gets p - (1-p)/d_y,  (x,x) gets (1-p)/d_y,
///   (u,u) for u in A ∪ {y} and every matched pair get (1-p)/d_x.
inline TransportPlan matching_plan(const Graph& g, const MatchingBoundCertificate& cert, const Rational& p) {
  const int dx = g.degree(cert.x), dy = g.degree(cert.y);
  if (p < Rational(1, 1 + dy) || p >= 1) throw std::invalid_argument("matching plan needs 1/(1+d_y) <= p < 1");
  TransportPlan plan;
  auto put = [&](Vertex u, Vertex v, const Rational& m) {
    if (m != 0) plan.mass[{u, v}] = m;
  };
  const Rational share_x = (1 - p) / dx, share_y = (1 - p) / dy;
  put(cert.x, cert.y, p - share_y);
  put(cert.x, cert.x, share_y);
  put(cert.y, cert.y, share_x);
  for (Vertex a : cert.split.common) put(a, a, share_x);
  for (auto [u, v] : cert.matching.edges) put(u, v, share_x);
  return plan;
}

/// Closed form of 2 (1 - |pi_p|) + cost(pi_p):
/// 2 (|N_x| - |M|)(1-p)/d_x + p - (1-p)/d_y + |M| (1-p)/d_x.
inline Rational matching_plan_bound(const Graph& g, const MatchingBoundCertificate& cert, const Rational& p) {
  const int dx = g.degree(cert.x), dy = g.degree(cert.y);
  const Rational nx(static_cast<long long>(cert.split.nx.size())), m(static_cast<long long>(cert.matching.size()));
  return 2 * (nx - m) * (1 - p) / dx + p - (1 - p) / dy + m * (1 - p) / dx;
}

struct PositivityResult {
  bool positive = true;
  std::optional<CurvatureValue> worst;  // a minimising edge, when any edge exists
};

/// Whether every edge has strictly positive curvature.
inline PositivityResult is_positively_curved(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("positivity check needs a connected graph");
  PositivityResult result;
  for (auto& c : edge_curvatures(g))
    if (!result.worst || c.value < result.worst->value) result.worst = std::move(c);
  result.positive = !result.worst || result.worst->value > 0;
  return result;
}

}  // namespace llyconn
