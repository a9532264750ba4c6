#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/integer/common_factor.hpp>

#include "llyconn/graph.hpp"
#include "llyconn/min_cost_flow.hpp"
#include "llyconn/rational.hpp"

namespace llyconn {

/// Finitely supported probability measure on the vertices of a graph.
/// Zero masses are not stored.
class Measure {
 public:
  Measure() = default;

  /// Throws std::invalid_argument on negative masses or total mass != 1.
  explicit Measure(const std::map<Vertex, Rational>& mass) {
    Rational total = 0;
    for (const auto& [v, m] : mass) {
      if (v < 0) throw std::invalid_argument("measure on negative vertex index");
      if (m < 0) throw std::invalid_argument("negative mass at vertex " + std::to_string(v));
      if (m != 0) mass_.emplace(v, m);
      total += m;
    }
    if (total != 1) throw std::invalid_argument("measure has total mass " + to_string(total));
  }

  static Measure point(Vertex v) { return Measure({{v, Rational(1)}}); }

  Rational operator()(Vertex v) const {
    auto it = mass_.find(v);
    return it == mass_.end() ? Rational(0) : it->second;
  }

  const std::map<Vertex, Rational>& masses() const { return mass_; }

  std::vector<Vertex> support() const {
    std::vector<Vertex> s;
    for (const auto& [v, m] : mass_) s.push_back(v);
    return s;
  }

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  std::map<Vertex, Rational> mass_;
};

/// Sparse map (source, target) -> mass.
struct TransportPlan {
  std::map<Edge, Rational> mass;

  Rational total() const {
    Rational t = 0;
    for (const auto& [pair, m] : mass) t += m;
    return t;
  }
  std::map<Vertex, Rational> row_marginal() const {
    std::map<Vertex, Rational> out;
    for (const auto& [pair, m] : mass) out[pair.first] += m;
    return out;
  }
  std::map<Vertex, Rational> column_marginal() const {
    std::map<Vertex, Rational> out;
    for (const auto& [pair, m] : mass) out[pair.second] += m;
    return out;
  }
};

/// Kantorovich certificate: a 1-Lipschitz potential on every vertex and its
/// objective sum_v potential(v) * (mu1(v) - mu2(v)).
struct DualCertificate {
  std::vector<Rational> potential;
  Rational objective;
};

struct WassersteinResult {
  Rational value;
  TransportPlan plan;
  DualCertificate dual;
};

/// mu_x^p: mass p at x and (1-p)/d_x on every neighbor of x.
inline Measure vertex_measure(const Graph& g, Vertex x, const Rational& p) {
  if (!g.valid(x)) throw std::invalid_argument("vertex " + std::to_string(x) + " out of range");
  if (p < 0 || p > 1) throw std::invalid_argument("laziness p must lie in [0,1], got " + to_string(p));
  if (p == 1) return Measure::point(x);
  if (g.degree(x) == 0)
    throw std::invalid_argument("vertex " + std::to_string(x) + " is isolated; mu_x^p needs p = 1");
  std::map<Vertex, Rational> mass{{x, p}};
  Rational share = (1 - p) / g.degree(x);
  for (Vertex v : g.neighbors(x)) mass[v] = share;
  return Measure(mass);
}

namespace detail {

inline void check_support(const Graph& g, const Measure& mu) {
  for (const auto& [v, m] : mu.masses())
    if (!g.valid(v)) throw std::invalid_argument("measure supported on vertex " + std::to_string(v) + " outside the graph");
}

inline int hop(const Graph& g, Vertex u, Vertex v) {
  int d = g.distances_from(u)[static_cast<std::size_t>(v)];
  if (d == kUnreachable)
    throw std::domain_error("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                            " lie in different components; no finite-cost plan");
  return d;
}

/// Common denominator of every mass in the given maps.
template <typename... Maps>
BigInt common_denominator(const Maps&... maps) {
  BigInt scale = 1;
  auto absorb = [&](const auto& map) {
    for (const auto& entry : map) scale = boost::integer::lcm(scale, denominator(entry.second));
  };
  (absorb(maps), ...);
  return scale;
}

inline std::int64_t scaled(const Rational& mass, const BigInt& scale) {
  Rational s = mass * scale;
  return to_int64(numerator(s));
}

struct ScaledProblem {
  std::vector<Vertex> sources, targets;
  TransportationInstance instance;
  BigInt scale;
};

inline ScaledProblem build_problem(const Graph& g, const std::map<Vertex, Rational>& rows,
                                   const std::map<Vertex, Rational>& cols, const BigInt& scale,
                                   const std::set<Edge>& forbidden = {}) {
  ScaledProblem problem;
  problem.scale = scale;
  for (const auto& [v, m] : rows)
    if (m > 0) {
      problem.sources.push_back(v);
      problem.instance.supply.push_back(scaled(m, scale));
    }
  for (const auto& [v, m] : cols)
    if (m > 0) {
      problem.targets.push_back(v);
      problem.instance.demand.push_back(scaled(m, scale));
    }
  for (Vertex u : problem.sources) {
    std::vector<std::int64_t> row;
    for (Vertex v : problem.targets) row.push_back(hop(g, u, v));
    problem.instance.cost.push_back(std::move(row));
  }
  if (!forbidden.empty()) {
    for (Vertex u : problem.sources) {
      std::vector<bool> row;
      for (Vertex v : problem.targets) row.push_back(!forbidden.contains({u, v}));
      problem.instance.allowed.push_back(std::move(row));
    }
  }
  return problem;
}

}  // namespace detail

/// Checks a Wasserstein result against its inputs: plan marginals, plan cost,
/// 1-Lipschitz potential on every reachable pair, and strong duality.
/// Returns a description of the first violation, or nullopt.
inline std::optional<std::string> certificate_violation(const Graph& g, const Measure& mu1, const Measure& mu2,
                                                        const WassersteinResult& result) {
  const auto rows = result.plan.row_marginal(), cols = result.plan.column_marginal();
  for (const auto& [pair, m] : result.plan.mass)
    if (m < 0) return "negative plan entry";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto r = rows.find(v);
    auto c = cols.find(v);
    if ((r == rows.end() ? Rational(0) : r->second) != mu1(v)) return "row marginal differs at " + std::to_string(v);
    if ((c == cols.end() ? Rational(0) : c->second) != mu2(v)) return "column marginal differs at " + std::to_string(v);
  }
  Rational cost = 0;
  for (const auto& [pair, m] : result.plan.mass) cost += m * detail::hop(g, pair.first, pair.second);
  if (cost != result.value) return "plan cost differs from value";
  const auto& f = result.dual.potential;
  if (static_cast<int>(f.size()) != g.vertex_count()) return "potential has wrong length";
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto row = g.distances_from(u);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (row[v] != kUnreachable && abs(f[u] - f[v]) > row[v])
        return "potential is not 1-Lipschitz on (" + std::to_string(u) + "," + std::to_string(v) + ")";
  }
  Rational objective = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) objective += f[v] * (mu1(v) - mu2(v));
  if (objective != result.dual.objective) return "dual objective misreported";
  if (objective != result.value) return "duality gap " + to_string(result.value - objective);
  return std::nullopt;
}

/// Opt-in verification of every wasserstein() call on the current thread.
struct CertificateAudit {
  long calls = 0;
  long failures = 0;
  std::string first_failure;
};

namespace detail {
inline thread_local CertificateAudit* active_audit = nullptr;
}

/// While alive, every wasserstein() on this thread is checked with
/// certificate_violation and tallied into `audit`.
class AuditScope {
 public:
  explicit AuditScope(CertificateAudit& audit) : previous_(detail::active_audit) { detail::active_audit = &audit; }
  ~AuditScope() { detail::active_audit = previous_; }
  AuditScope(const AuditScope&) = delete;
  AuditScope& operator=(const AuditScope&) = delete;

 private:
  CertificateAudit* previous_;
};

/// Exact W1 distance under the hop metric, with an optimal plan and a dual
/// potential attaining the same value.
///
/// Masses are scaled by the common denominator, an integer transportation
/// problem over support x support is solved, and the column potentials psi are
/// extended to all of V by f(w) = min_j psi(j) + d(w, target_j).
inline WassersteinResult wasserstein(const Graph& g, const Measure& mu1, const Measure& mu2) {
  detail::check_support(g, mu1);
  detail::check_support(g, mu2);
  const BigInt scale = detail::common_denominator(mu1.masses(), mu2.masses());
  auto problem = detail::build_problem(g, mu1.masses(), mu2.masses(), scale);
  auto solution = solve_transportation(problem.instance);

  WassersteinResult result;
  result.value = Rational(BigInt(solution.cost), scale);
  for (std::size_t i = 0; i < problem.sources.size(); ++i)
    for (std::size_t j = 0; j < problem.targets.size(); ++j)
      if (solution.flow[i][j] > 0)
        result.plan.mass[{problem.sources[i], problem.targets[j]}] = Rational(BigInt(solution.flow[i][j]), scale);

  const int n = g.vertex_count();
  result.dual.potential.assign(static_cast<std::size_t>(n), Rational(0));
  for (Vertex w = 0; w < n; ++w) {
    auto row = g.distances_from(w);
    std::optional<std::int64_t> best;
    for (std::size_t j = 0; j < problem.targets.size(); ++j) {
      int d = row[problem.targets[j]];
      if (d == kUnreachable) continue;
      std::int64_t candidate = solution.column_potential[j] + d;
      if (!best || candidate < *best) best = candidate;
    }
    if (best) result.dual.potential[w] = Rational(BigInt(*best));
  }
  for (Vertex v = 0; v < n; ++v) result.dual.objective += result.dual.potential[v] * (mu1(v) - mu2(v));

  if (auto* audit = detail::active_audit) {
    ++audit->calls;
    if (auto problem_text = certificate_violation(g, mu1, mu2, result)) {
      if (audit->failures++ == 0) audit->first_failure = *problem_text;
    }
  }
  return result;
}

/// Exact cost sum d(u,v) * plan(u,v). Throws when positive mass sits on an
/// unreachable pair or an entry is negative.
inline Rational plan_cost(const Graph& g, const TransportPlan& plan) {
  Rational cost = 0;
  for (const auto& [pair, m] : plan.mass) {
    if (m < 0) throw std::invalid_argument("negative plan entry");
    if (m == 0) continue;
    if (!g.valid(pair.first) || !g.valid(pair.second)) throw std::invalid_argument("plan entry outside the graph");
    cost += m * detail::hop(g, pair.first, pair.second);
  }
  return cost;
}

using ForcedEntries = std::vector<std::pair<Edge, Rational>>;

/// Minimum plan cost when the listed entries are fixed to the given masses.
/// Forced mass is deducted from both marginals and its cost added as a
/// constant; the forced pairs carry no further flow.
inline Rational wasserstein_forced(const Graph& g, const Measure& mu1, const Measure& mu2,
                                   const ForcedEntries& forced) {
  detail::check_support(g, mu1);
  detail::check_support(g, mu2);
  std::map<Vertex, Rational> rows = mu1.masses(), cols = mu2.masses();
  std::set<Edge> fixed;
  Rational constant = 0;
  for (const auto& [pair, m] : forced) {
    if (!fixed.insert(pair).second)
      throw std::invalid_argument("pair (" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                                  ") forced twice");
    if (m < 0) throw std::invalid_argument("negative forced mass");
    if (m == 0) continue;
    rows[pair.first] -= m;
    cols[pair.second] -= m;
    constant += m * detail::hop(g, pair.first, pair.second);
  }
  for (const auto& [v, m] : rows)
    if (m < 0) throw std::domain_error("infeasible forcing: row " + std::to_string(v) + " over-committed");
  for (const auto& [v, m] : cols)
    if (m < 0) throw std::domain_error("infeasible forcing: column " + std::to_string(v) + " over-committed");

  const BigInt scale = detail::common_denominator(rows, cols);
  auto problem = detail::build_problem(g, rows, cols, scale, fixed);
  try {
    auto solution = solve_transportation(problem.instance);
    return constant + Rational(BigInt(solution.cost), scale);
  } catch (const InfeasibleTransport&) {
    throw std::domain_error("infeasible forcing: remaining mass cannot avoid the fixed pairs");
  }
}

/// Upper bound 2 (1 - |pi0|) + cost(pi0) for a partial plan pi0 whose row
/// and column sums stay below mu1 and mu2, on a graph of diameter at most 2.
inline Rational plan_upper_bound(const Graph& g, const TransportPlan& partial, const Measure& mu1,
                                 const Measure& mu2) {
  auto diam = diameter(g);
  if (!diam || *diam > 2) throw std::domain_error("plan_upper_bound needs a graph of diameter at most 2");
  for (const auto& [v, m] : partial.row_marginal())
    if (m > mu1(v)) throw std::domain_error("partial plan row " + std::to_string(v) + " exceeds the first measure");
  for (const auto& [v, m] : partial.column_marginal())
    if (m > mu2(v)) throw std::domain_error("partial plan column " + std::to_string(v) + " exceeds the second measure");
  return 2 * (1 - partial.total()) + plan_cost(g, partial);
}

}  // namespace llyconn
