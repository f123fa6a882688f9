#pragma once

#include <cstddef>
#include <vector>

#include "densub/graph.hpp"
#include "densub/solution.hpp"

namespace densub {

/// Full record of greedy minimum-degree peeling. Suffix subgraph H_i is the
/// set of the i vertices still present before the (n-i+1)-th removal; H_n is
/// the whole graph and H_0 is empty.
class PeelingTrace {
 public:
  PeelingTrace() = default;
  PeelingTrace(std::vector<VertexId> order, std::vector<WeightUnits> removal_units,
               WeightUnits total_units, WeightUnits scale);

  std::size_t n() const { return order_.size(); }

  // order()[0] is the first vertex removed (v_n), order().back() the last (v_1).
  const std::vector<VertexId>& order() const { return order_; }
  // removal_units()[j] is the weighted degree, in weight units, of order()[j]
  // inside the subgraph it was removed from.
  const std::vector<WeightUnits>& removal_units() const { return removal_; }

  // Vertex v_i and r_i for i in [1, n].
  VertexId vertex(std::size_t i) const { return order_[n() - i]; }
  Rational removal_degree(std::size_t i) const { return {removal_[n() - i], scale_}; }

  // W(H_i) for i in [0, n].
  WeightUnits suffix_units(std::size_t i) const { return suffix_[i]; }
  Rational suffix_weight(std::size_t i) const { return {suffix_[i], scale_}; }
  // d(H_i) for i in [1, n].
  Rational suffix_density(std::size_t i) const { return density_of(suffix_[i], i, scale_); }
  VertexSet suffix(std::size_t i) const;

 private:
  std::vector<VertexId> order_;
  std::vector<WeightUnits> removal_;
  std::vector<WeightUnits> suffix_;
  WeightUnits scale_ = 1;
};

struct CoreResult {
  Rational threshold;
  VertexSet core;
  // I(w): the largest i with r_i >= w, or 0 when the core is empty.
  std::size_t index = 0;
};

// Repeatedly removes a vertex of minimum weighted degree, ties to the
// smallest id. Unit-weight graphs go through degree buckets.
PeelingTrace peel(const WeightedGraph& g);

// The w-core read off an existing trace.
CoreResult w_core(const PeelingTrace& trace, const Rational& w);
CoreResult w_core(const WeightedGraph& g, const Rational& w);

// Densest suffix H_i with i >= k; density ties go to the larger suffix.
// Ratio 3 for the densest at-least-k problem.
SubgraphResult chalk(const WeightedGraph& g, std::size_t k);
SubgraphResult chalk(const WeightedGraph& g, const PeelingTrace& trace, std::size_t k);

// chalk(g, 1): the greedy 2-approximation of the densest subgraph.
SubgraphResult charikar_densest(const WeightedGraph& g);

}  // namespace densub
