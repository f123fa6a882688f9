#pragma once

#include <string>
#include <variant>

#include "densub/graph.hpp"

namespace densub {

struct ExactGuarantee {};
struct HeuristicGuarantee {};

// Worst-case ratio optimum/returned a solver promises.
using Guarantee = std::variant<Rational, ExactGuarantee, HeuristicGuarantee>;

std::string guarantee_string(const Guarantee& g);

struct SubgraphResult {
  VertexSet subgraph;
  Rational density;
  Rational weight;
  std::string method;
  Guarantee guarantee;
};

// Scores s in g and packages it. s must be nonempty.
SubgraphResult make_result(const WeightedGraph& g, VertexSet s, std::string method,
                           Guarantee guarantee);

}  // namespace densub
