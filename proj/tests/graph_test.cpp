#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "llyconn/families.hpp"
#include "llyconn/graph.hpp"
#include "oracles.hpp"

using namespace llyconn;

TEST(Graph, SingleEdge) {
  Graph g(2, {{0, 1}});
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.degree(1), 1);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{-1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(-1, {}), std::invalid_argument);
}

TEST(Graph, Petersen) {
  auto g = fixtures::petersen();
  EXPECT_EQ(g.vertex_count(), 10);
  EXPECT_EQ(g.edge_count(), 15u);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3);
  EXPECT_EQ(diameter(g), 2);
  auto fw = oracle::floyd_warshall(g);
  for (int u = 0; u < 10; ++u)
    for (int v = 0; v < 10; ++v) EXPECT_EQ(distance(g, u, v), fw[u][v]);
}

TEST(Graph, Distances) {
  EXPECT_EQ(distance(complete(5), 0, 3), 1);
  EXPECT_EQ(distance(cycle(6), 0, 3), 3);
  Graph two(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(distance(two, 0, 2).has_value());
  EXPECT_EQ(two.distances_from(0)[2], kUnreachable);
  EXPECT_FALSE(diameter(two).has_value());
  EXPECT_FALSE(is_connected(two));
}

TEST(Graph, Diameter) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(diameter(complete(n)), 1);
  EXPECT_EQ(diameter(cycle(6)), 3);
  EXPECT_EQ(diameter(fixtures::bowtie()), 2);
  EXPECT_EQ(diameter(complete(1)), 0);
}

TEST(Graph, MinMaxDegree) {
  EXPECT_EQ(min_degree(complete(5)), 4);
  EXPECT_EQ(min_degree(fixtures::bowtie()), 2);
  EXPECT_EQ(max_degree(fixtures::bowtie()), 4);
  EXPECT_EQ(min_degree(complete(1)), 0);
}

TEST(Graph, EdgeSplitComplete) {
  auto s = edge_split(complete(4), 0, 1);
  EXPECT_EQ(s.common, (std::vector<Vertex>{2, 3}));
  EXPECT_TRUE(s.nx.empty());
  EXPECT_TRUE(s.ny.empty());
  EXPECT_TRUE(s.outside.empty());
}

TEST(Graph, EdgeSplitCycle) {
  auto s = edge_split(cycle(5), 0, 1);
  EXPECT_TRUE(s.common.empty());
  EXPECT_EQ(s.nx, (std::vector<Vertex>{4}));
  EXPECT_EQ(s.ny, (std::vector<Vertex>{2}));
  EXPECT_EQ(s.outside, (std::vector<Vertex>{3}));
}

TEST(Graph, EdgeSplitBowtie) {
  auto s = edge_split(fixtures::bowtie(), 0, 1);
  EXPECT_EQ(s.common, (std::vector<Vertex>{4}));
  EXPECT_TRUE(s.nx.empty());
  EXPECT_TRUE(s.ny.empty());
  EXPECT_EQ(s.outside, (std::vector<Vertex>{2, 3}));
}

TEST(Graph, EdgeSplitNeedsEdge) { EXPECT_THROW(edge_split(cycle(5), 0, 2), std::invalid_argument); }

TEST(Graph, ComponentsWithRemoval) {
  auto g = fixtures::bowtie();
  EXPECT_EQ(components(g).size(), 1u);
  std::vector<bool> removed(5, false);
  removed[4] = true;
  auto parts = components(g, removed);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(parts[1], (std::vector<Vertex>{2, 3}));
}

TEST(GraphProperty, MetricAndSplitIdentities) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    std::mt19937_64 rng(seed);
    int n = 2 + static_cast<int>(rng() % 8);
    auto g = random_connected(n, Rational(1, 2), seed);
    auto fw = oracle::floyd_warshall(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        ASSERT_EQ(distance(g, u, v), fw[u][v]);
        ASSERT_EQ(distance(g, u, v), distance(g, v, u));
        ASSERT_EQ(fw[u][v] == 1, g.adjacent(u, v));
        for (int w = 0; w < n; ++w) ASSERT_LE(fw[u][w], fw[u][v] + fw[v][w]);
      }
    for (auto [x, y] : g.edges()) {
      auto s = edge_split(g, x, y);
      EXPECT_EQ(s.common.size() + s.nx.size() + 1, static_cast<std::size_t>(g.degree(x)));
      EXPECT_EQ(s.common.size() + s.ny.size() + 1, static_cast<std::size_t>(g.degree(y)));
      EXPECT_EQ(s.common.size() + s.nx.size() + s.ny.size() + s.outside.size() + 2, static_cast<std::size_t>(n));
      EXPECT_EQ(static_cast<int>(s.common.size()), common_neighbor_count(g, x, y));
    }
  }
}
