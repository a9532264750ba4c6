#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "llyconn/curvature.hpp"
#include "llyconn/families.hpp"
#include "oracles.hpp"

using namespace llyconn;

namespace {

Rational R(long long a, long long b = 1) { return Rational(a, b); }

bool regular(const Graph& g) { return min_degree(g) == max_degree(g); }

}  // namespace

TEST(KappaP, Examples) {
  EXPECT_EQ(kappa_p(fixtures::petersen(), 0, 1, 1), 0);
  EXPECT_EQ(kappa_p(cycle(6), 0, 3, 1), 0);
  EXPECT_EQ(kappa_p(cycle(5), 0, 1, R(1, 3)), R(1, 3));
  EXPECT_EQ(kappa_p(complete(2), 0, 1, R(3, 4)), R(1, 2));
}

TEST(KappaP, Rejects) {
  EXPECT_THROW(kappa_p(cycle(5), 0, 0, R(1, 2)), std::invalid_argument);
  EXPECT_THROW(kappa_p(Graph(4, {{0, 1}, {2, 3}}), 0, 2, R(1, 2)), std::domain_error);
}

TEST(Lly, CompleteGraphs) {
  for (int n = 2; n <= 7; ++n) {
    auto g = complete(n);
    for (auto [u, v] : g.edges()) EXPECT_EQ(lly_curvature(g, u, v).value, R(n, n - 1));
  }
}

TEST(Lly, Hamming) {
  auto g = hamming(2, 3);
  for (auto [u, v] : g.edges()) EXPECT_EQ(lly_curvature(g, u, v).value, R(3, 4));
}

TEST(Lly, CompleteMinusMatching) {
  // Edges touching the matching have curvature 1; edges between two
  // unmatched vertices keep the K_n value n/(n-1). The minimum is 1.
  for (int n = 3; n <= 7; ++n)
    for (int m = 1; 2 * m <= n; ++m) {
      auto g = complete_minus_matching(n, m);
      for (auto [u, v] : g.edges()) {
        Rational want = u >= 2 * m && v >= 2 * m ? R(n, n - 1) : R(1);
        EXPECT_EQ(lly_curvature(g, u, v).value, want) << n << " " << m << " edge " << u << "-" << v;
      }
      EXPECT_EQ(is_positively_curved(g).worst->value, 1);
    }
}

TEST(Lly, Cycles) {
  auto c5 = cycle(5);
  for (auto [u, v] : c5.edges()) EXPECT_EQ(lly_curvature(c5, u, v).value, R(1, 2));
  for (int n = 6; n <= 9; ++n) {
    auto g = cycle(n);
    for (auto [u, v] : g.edges()) EXPECT_EQ(lly_curvature(g, u, v).value, 0);
  }
}

TEST(Lly, FiveCycleAgreesWithDualOracle) {
  auto g = cycle(5);
  // Check two laziness values in the linear regime against the oracle.
  for (Rational p : {R(1, 2), R(3, 4)}) {
    Rational w = oracle::dual_wasserstein(g, vertex_measure(g, 0, p), vertex_measure(g, 1, p));
    EXPECT_EQ((1 - w) / (1 - p), R(1, 2));
  }
}

TEST(Lly, DistanceTwoPairs) {
  auto g = cycle(6);
  EXPECT_EQ(lly_curvature(g, 0, 2).value, R(1, 2));
  EXPECT_EQ(lly_curvature(g, 0, 3).value, R(2, 3));
  auto b = fixtures::bowtie();
  EXPECT_EQ(lly_curvature(b, 0, 2).value, R(1, 2));
  EXPECT_EQ(lly_curvature(b, 0, 2).method, CurvatureMethod::FlowLimit);
}

TEST(Lly, StartPoint) {
  EXPECT_EQ(lly_start_point(fixtures::bowtie(), 0, 4), R(1, 5));
  EXPECT_EQ(lly_start_point(cycle(5), 0, 1), R(1, 3));
}

TEST(EqualDegree, Examples) {
  for (int n = 2; n <= 6; ++n) {
    auto [value, assignment] = lly_equal_degree(complete(n), 0, 1);
    EXPECT_EQ(value.value, R(n, n - 1));
    EXPECT_TRUE(assignment.bijection.empty());
    EXPECT_EQ(assignment.total_cost, 0);
  }
  auto [c5, c5_assignment] = lly_equal_degree(cycle(5), 0, 1);
  EXPECT_EQ(c5.value, R(1, 2));
  EXPECT_EQ(c5_assignment.bijection, (std::vector<Edge>{{4, 2}}));
  EXPECT_EQ(c5.method, CurvatureMethod::EqualDegreeAssignment);
  auto ex = sharp_example(10, 5);
  EXPECT_EQ(lly_equal_degree(ex.graph, ex.x, ex.y).first.value, R(2, 5));
}

TEST(EqualDegree, Rejects) {
  EXPECT_THROW(lly_equal_degree(fixtures::bowtie(), 0, 4), std::invalid_argument);
  EXPECT_THROW(lly_equal_degree(cycle(5), 0, 2), std::invalid_argument);
}

TEST(Scale, Examples) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(curvature_at_scale(complete(n), 1)->value, R(n, n - 1));
    EXPECT_FALSE(curvature_at_scale(complete(n), 2).has_value());
  }
  EXPECT_EQ(curvature_at_scale(fixtures::bowtie(), 2)->value, R(1, 2));
  EXPECT_EQ(curvature_at_scale(cycle(6), 1)->value, 0);
  EXPECT_THROW(curvature_at_scale(cycle(6), 0), std::invalid_argument);
}

TEST(MatchingBound, Complete) {
  for (int n = 3; n <= 6; ++n) {
    auto cert = matching_transport_bound(complete(n), 0, 1);
    EXPECT_EQ(cert.L, n - 2);
    EXPECT_EQ(cert.bound, R(n, n - 1));
  }
}

TEST(MatchingBound, SharpExample) {
  auto ex = sharp_example(10, 5);
  auto cert = matching_transport_bound(ex.graph, ex.x, ex.y);
  EXPECT_EQ(cert.matching.size(), 0u);
  EXPECT_EQ(cert.L, 0);
  EXPECT_EQ(cert.bound, R(2, 5));
}

TEST(MatchingBound, Bowtie) {
  auto g = fixtures::bowtie();
  auto cert = matching_transport_bound(g, 0, 4);
  EXPECT_EQ(cert.x, 4);
  EXPECT_LE(cert.bound, lly_curvature(g, 0, 4).value);
}

TEST(MatchingBound, Rejects) {
  EXPECT_THROW(matching_transport_bound(cycle(6), 0, 1), std::domain_error);
  EXPECT_THROW(matching_transport_bound(cycle(5), 0, 2), std::invalid_argument);
  auto cert = matching_transport_bound(cycle(5), 0, 1);
  EXPECT_THROW(matching_plan(cycle(5), cert, R(1, 4)), std::invalid_argument);
  EXPECT_THROW(matching_plan(cycle(5), cert, 1), std::invalid_argument);
}

TEST(Positivity, Examples) {
  EXPECT_TRUE(is_positively_curved(complete(5)).positive);
  auto c6 = is_positively_curved(cycle(6));
  EXPECT_FALSE(c6.positive);
  EXPECT_EQ(c6.worst->value, 0);
  EXPECT_TRUE(is_positively_curved(hamming(2, 3)).positive);
  EXPECT_THROW(is_positively_curved(empty_graph(2)), std::domain_error);
}

TEST(CurvatureProperty, EqualDegreeAgreesOnRegularGraphs) {
  std::vector<Graph> graphs{fixtures::petersen(), hamming(2, 3), hamming(3, 2), cycle(7), complete_minus_matching(6, 3),
                            cartesian_product(complete(3), cycle(3))};
  for (const auto& g : graphs) {
    ASSERT_TRUE(regular(g));
    for (auto [u, v] : g.edges()) EXPECT_EQ(lly_equal_degree(g, u, v).first.value, lly_curvature(g, u, v).value);
  }
}

TEST(CurvatureProperty, LimitIsReachedAtStart) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = random_connected(3 + static_cast<int>(seed % 6), R(1, 2), seed);
    for (auto [u, v] : g.edges()) {
      auto c = lly_curvature(g, u, v);
      Rational p = lly_start_point(g, u, v);
      EXPECT_EQ(lly_probe(g, u, v, p), c.value);
      EXPECT_EQ(lly_probe(g, u, v, (1 + p) / 2), c.value);
      EXPECT_LE(c.value, 2);
      if (g.degree(u) == g.degree(v)) {
        EXPECT_EQ(lly_equal_degree(g, u, v).first.value, c.value);
      }
      if (*diameter(g) <= 2) {
        EXPECT_LE(matching_transport_bound(g, u, v).bound, c.value);
      }
    }
  }
}
