#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "densub/graph.hpp"

namespace densub::testing {

inline WeightedGraph path3() { return WeightedGraph::unweighted(3, {{0, 1}, {1, 2}}); }
inline WeightedGraph triangle() { return WeightedGraph::unweighted(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline WeightedGraph k4() {
  return WeightedGraph::unweighted(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}
inline WeightedGraph star3() { return WeightedGraph::unweighted(4, {{0, 1}, {0, 2}, {0, 3}}); }
// Triangle {0,1,2} with pendant 3 hanging off 0.
inline WeightedGraph triangle_pendant() {
  return WeightedGraph::unweighted(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
}
// K4 on {0,1,2,3} with pendant 4 hanging off 0.
inline WeightedGraph k4_pendant() {
  return WeightedGraph::unweighted(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
}
inline WeightedGraph single_edge(WeightUnits w = 1) { return WeightedGraph(2, {{0, 1, w}}, 1); }

// G(n, p) with weights j/100, j in [1, 1000] (or unit weights).
inline WeightedGraph random_graph_np(std::mt19937_64& rng, VertexId n, double p, bool weighted) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<WeightUnits> w(1, 1000);
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.push_back({a, b, weighted ? w(rng) : 1});
    }
  }
  return WeightedGraph(n, std::move(edges), weighted ? 100 : 1);
}

inline VertexSet random_subset(std::mt19937_64& rng, VertexId n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<VertexId> ids;
  for (VertexId v = 0; v < n; ++v) {
    if (coin(rng)) ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

}  // namespace densub::testing
