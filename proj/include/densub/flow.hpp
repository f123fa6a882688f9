#pragma once

#include <cstdint>
#include <vector>

#include "densub/graph.hpp"

namespace densub {

using NodeId = std::uint32_t;
using Capacity = std::int64_t;

struct Arc {
  NodeId from;
  NodeId to;
  Capacity capacity;
};

/// Directed network with integer capacities. Capacities are measured in units
/// of 1/capacity_scale so networks built from rational data stay exact.
struct FlowNetwork {
  NodeId nodes = 0;
  NodeId source = 0;
  NodeId sink = 1;
  std::vector<Arc> arcs;
  std::int64_t capacity_scale = 1;

  void add_arc(NodeId from, NodeId to, Capacity capacity);
};

struct MinCut {
  Capacity raw_value = 0;  // in capacity units
  Rational value;          // raw_value / capacity_scale
  // Nodes reachable from the source in the final residual network: the
  // smallest source side over all minimum cuts.
  std::vector<std::uint8_t> min_source_side;
  // Complement of the nodes that reach the sink in the residual network: the
  // largest source side over all minimum cuts.
  std::vector<std::uint8_t> max_source_side;
};

// Dinic's algorithm. Throws DomainError on a malformed network (negative
// capacity, source == sink, arc endpoint out of range).
MinCut max_flow_min_cut(const FlowNetwork& net);

/// Goldberg-style network for max_H W(H) - alpha|H|: node 0 is the source,
/// node 1 the sink, nodes 2..n+1 the vertices, then one node per edge.
/// source -> edge node carries w(e), edge node -> each endpoint is
/// effectively infinite, vertex -> sink carries alpha. The source-side
/// vertices of a minimum cut maximize the objective, and the cut value is
/// W(G) - max_H (W(H) - alpha|H|).
FlowNetwork excess_network(const WeightedGraph& g, const Rational& alpha);

// Vertex ids 0..n-1 for network node ids.
inline NodeId vertex_node(VertexId v) { return v + 2; }

struct ExcessMaximizer {
  Rational alpha;
  Rational value;  // max_H W(H) - alpha|H|
  VertexSet smallest;
  VertexSet largest;
};

ExcessMaximizer max_excess(const WeightedGraph& g, const Rational& alpha);

/// Breakpoints and nested maximizers of alpha -> max_H W(H) - alpha|H|.
/// chain[0] is all of V (the largest maximizer at alpha = 0), chain.back() is
/// empty, and chain[j] is optimal on [breakpoints[j-1], breakpoints[j]].
struct NestedFamily {
  std::vector<Rational> breakpoints;
  std::vector<VertexSet> chain;
  std::vector<WeightUnits> chain_units;  // W(chain[j]) in weight units
  WeightUnits weight_scale = 1;

  // max over chain members of W(S) - alpha|S|; equals the global maximum.
  Rational value(const Rational& alpha) const;
};

// Finds every breakpoint by recursive line intersection: one max-flow per
// breakpoint plus one per interval check.
NestedFamily parametric_family(const WeightedGraph& g);

}  // namespace densub
