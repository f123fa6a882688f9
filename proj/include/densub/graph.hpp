#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "densub/kernels.hpp"
#include "densub/rational.hpp"

namespace densub {

using VertexId = std::uint32_t;

// Edge weights are stored as integers in units of 1/weight_scale(), so every
// induced weight is exact.
using WeightUnits = std::int64_t;

struct Edge {
  VertexId u;
  VertexId v;
  WeightUnits w;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids);
  explicit VertexSet(std::vector<VertexId> ids);

  static VertexSet range(VertexId n);
  static VertexSet from_mask(std::span<const std::uint8_t> mask);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(VertexId v) const;
  const std::vector<VertexId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool is_subset_of(const VertexSet& other) const;
  VertexSet united(const VertexSet& other) const;
  std::vector<std::uint8_t> mask(VertexId n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> ids_;
};

/// Immutable simple undirected graph with positive edge weights and CSR
/// adjacency. Weighted degrees and the total weight are precomputed.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Validates the edge list: throws MalformedInput on self-loops, duplicate
  // undirected edges, non-positive weights, or ids >= n.
  WeightedGraph(VertexId n, std::vector<Edge> edges, WeightUnits weight_scale = 1);

  // Unit-weight convenience constructor.
  static WeightedGraph unweighted(VertexId n,
                                  std::initializer_list<std::pair<VertexId, VertexId>> edges);

  VertexId n() const { return n_; }
  std::size_t m() const { return eu_.size(); }
  WeightUnits weight_scale() const { return scale_; }

  Edge edge(std::size_t e) const { return {eu_[e], ev_[e], ew_[e]}; }
  kernels::EdgeColumns edge_columns() const { return {eu_, ev_, ew_}; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::span<const WeightUnits> neighbor_weights(VertexId v) const {
    return {adj_w_.data() + offsets_[v], adj_w_.data() + offsets_[v + 1]};
  }

  WeightUnits degree_units(VertexId v) const { return degree_[v]; }
  WeightUnits total_units() const { return total_; }
  Rational weighted_degree(VertexId v) const { return {degree_[v], scale_}; }
  Rational total_weight() const { return {total_, scale_}; }
  Rational weight(const Edge& e) const { return {e.w, scale_}; }

  // True when every edge carries the same weight.
  bool uniform_weights() const { return uniform_; }
  WeightUnits max_edge_units() const { return max_w_; }

  // The subgraph induced by s, relabelled 0..|s|-1 in increasing id order.
  WeightedGraph induced(const VertexSet& s) const;
  // Same vertex set, with every edge that has both ends in s removed.
  WeightedGraph without_edges_inside(const VertexSet& s) const;

  void check_set(const VertexSet& s) const;

 private:
  VertexId n_ = 0;
  WeightUnits scale_ = 1;
  std::vector<VertexId> eu_;
  std::vector<VertexId> ev_;
  std::vector<WeightUnits> ew_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adj_;
  std::vector<WeightUnits> adj_w_;
  std::vector<WeightUnits> degree_;
  WeightUnits total_ = 0;
  WeightUnits max_w_ = 0;
  bool uniform_ = true;
};

struct DensityReport {
  VertexSet subgraph;
  Rational total_weight;
  Rational density;
};

/// Edge-list text: "u v" or "u v w" per line, '#' comments, blank lines
/// skipped. Without `weighted`, a third column is rejected.
WeightedGraph parse_graph(std::string_view text, bool weighted);

// One "u v" (or "u v w" when weighted) line per edge, weights written with
// exactly as many decimals as the graph's weight scale needs.
std::string serialize_graph(const WeightedGraph& g, bool weighted);

// Integer weight units of edges with both endpoints in s.
WeightUnits induced_units(const WeightedGraph& g, const VertexSet& s);
Rational induced_weight(const WeightedGraph& g, const VertexSet& s);

// Throws DomainError for the empty set.
DensityReport density(const WeightedGraph& g, const VertexSet& s);

// Densities compare as units/size; these helpers avoid building Rationals in
// hot loops.
inline Rational density_of(WeightUnits units, std::size_t size, WeightUnits scale) {
  return {units, static_cast<std::int64_t>(size) * scale};
}

}  // namespace densub
