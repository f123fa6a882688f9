#include "densub/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "densub/errors.hpp"

namespace densub {

VertexSet::VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(VertexId n) {
  VertexSet s;
  s.ids_.resize(n);
  std::iota(s.ids_.begin(), s.ids_.end(), VertexId{0});
  return s;
}

VertexSet VertexSet::from_mask(std::span<const std::uint8_t> mask) {
  VertexSet s;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) s.ids_.push_back(static_cast<VertexId>(v));
  }
  return s;
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

std::vector<std::uint8_t> VertexSet::mask(VertexId n) const {
  std::vector<std::uint8_t> m(n, 0);
  for (VertexId v : ids_) m[v] = 1;
  return m;
}

WeightedGraph::WeightedGraph(VertexId n, std::vector<Edge> edges, WeightUnits weight_scale)
    : n_(n), scale_(weight_scale) {
  if (weight_scale <= 0) throw MalformedInput("weight scale must be positive");
  std::vector<std::uint64_t> keys;
  keys.reserve(edges.size());
  eu_.reserve(edges.size());
  ev_.reserve(edges.size());
  ew_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw MalformedInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") has an endpoint >= n = " + std::to_string(n));
    }
    if (e.u == e.v) throw MalformedInput("self-loop at vertex " + std::to_string(e.u));
    if (e.w <= 0) {
      throw MalformedInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") has non-positive weight");
    }
    VertexId a = std::min(e.u, e.v);
    VertexId b = std::max(e.u, e.v);
    keys.push_back((std::uint64_t{a} << 32) | b);
    eu_.push_back(a);
    ev_.push_back(b);
    ew_.push_back(e.w);
  }
  std::sort(keys.begin(), keys.end());
  if (auto dup = std::adjacent_find(keys.begin(), keys.end()); dup != keys.end()) {
    throw MalformedInput("duplicate edge (" + std::to_string(*dup >> 32) + "," +
                         std::to_string(*dup & 0xffffffffu) + ")");
  }

  degree_.assign(n, 0);
  std::vector<std::size_t> count(n + 1, 0);
  for (std::size_t e = 0; e < eu_.size(); ++e) {
    ++count[eu_[e] + 1];
    ++count[ev_[e] + 1];
    degree_[eu_[e]] += ew_[e];
    degree_[ev_[e]] += ew_[e];
    total_ += ew_[e];
    max_w_ = std::max(max_w_, ew_[e]);
    if (ew_[e] != ew_[0]) uniform_ = false;
  }
  std::partial_sum(count.begin(), count.end(), count.begin());
  offsets_ = count;
  adj_.resize(2 * eu_.size());
  adj_w_.resize(2 * eu_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < eu_.size(); ++e) {
    adj_[fill[eu_[e]]] = ev_[e];
    adj_w_[fill[eu_[e]]++] = ew_[e];
    adj_[fill[ev_[e]]] = eu_[e];
    adj_w_[fill[ev_[e]]++] = ew_[e];
  }
}

WeightedGraph WeightedGraph::unweighted(
    VertexId n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v, 1});
  return WeightedGraph(n, std::move(list), 1);
}

void WeightedGraph::check_set(const VertexSet& s) const {
  if (!s.empty() && s.ids().back() >= n_) {
    throw DomainError("vertex " + std::to_string(s.ids().back()) + " out of range for n = " +
                      std::to_string(n_));
  }
}

WeightedGraph WeightedGraph::induced(const VertexSet& s) const {
  check_set(s);
  constexpr VertexId kAbsent = ~VertexId{0};
  std::vector<VertexId> relabel(n_, kAbsent);
  VertexId next = 0;
  for (VertexId v : s) relabel[v] = next++;
  std::vector<Edge> kept;
  for (std::size_t e = 0; e < m(); ++e) {
    if (relabel[eu_[e]] != kAbsent && relabel[ev_[e]] != kAbsent) {
      kept.push_back({relabel[eu_[e]], relabel[ev_[e]], ew_[e]});
    }
  }
  return WeightedGraph(next, std::move(kept), scale_);
}

WeightedGraph WeightedGraph::without_edges_inside(const VertexSet& s) const {
  check_set(s);
  auto in = s.mask(n_);
  std::vector<Edge> kept;
  for (std::size_t e = 0; e < m(); ++e) {
    if (!(in[eu_[e]] && in[ev_[e]])) kept.push_back(edge(e));
  }
  return WeightedGraph(n_, std::move(kept), scale_);
}

WeightUnits induced_units(const WeightedGraph& g, const VertexSet& s) {
  g.check_set(s);
  std::vector<std::uint32_t> member(g.n(), 0);
  for (VertexId v : s) member[v] = 1;
  return kernels::masked_edge_weight(g.edge_columns(), member);
}

Rational induced_weight(const WeightedGraph& g, const VertexSet& s) {
  return {induced_units(g, s), g.weight_scale()};
}

DensityReport density(const WeightedGraph& g, const VertexSet& s) {
  if (s.empty()) throw DomainError("density of the empty vertex set is undefined");
  WeightUnits units = induced_units(g, s);
  return {s, Rational(units, g.weight_scale()), density_of(units, s.size(), g.weight_scale())};
}

}  // namespace densub
