#pragma once

#include <vector>

#include "llyconn/families.hpp"
#include "llyconn/graph.hpp"

namespace llyconn::fixtures {

// Two triangles sharing vertex 4.
inline Graph bowtie() { return two_kn_join(2, complete(1)); }

inline Graph figure_two() { return two_kn_join(3, empty_graph(2)); }

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

}  // namespace llyconn::fixtures
