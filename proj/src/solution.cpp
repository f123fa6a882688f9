#include "densub/solution.hpp"

#include "densub/errors.hpp"

namespace densub {

std::string guarantee_string(const Guarantee& g) {
  struct Visitor {
    std::string operator()(const Rational& r) const { return r.to_string(); }
    std::string operator()(const ExactGuarantee&) const { return "exact"; }
    std::string operator()(const HeuristicGuarantee&) const { return "heuristic"; }
  };
  return std::visit(Visitor{}, g);
}

SubgraphResult make_result(const WeightedGraph& g, VertexSet s, std::string method,
                           Guarantee guarantee) {
  DensityReport report = density(g, s);
  return {std::move(s), report.density, report.total_weight, std::move(method),
          std::move(guarantee)};
}

}  // namespace densub
