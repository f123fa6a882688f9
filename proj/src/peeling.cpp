#include "densub/peeling.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "densub/errors.hpp"

namespace densub {
namespace {

// Unit weights: integer degrees index an array of buckets. Each bucket is a
// lazy min-heap of ids so the smallest id at the minimum degree comes out
// first; stale entries (degree changed or already removed) are skipped.
PeelingTrace peel_buckets(const WeightedGraph& g) {
  const VertexId n = g.n();
  const WeightUnits unit = g.m() > 0 ? g.edge(0).w : 1;
  std::vector<std::uint32_t> deg(n);
  std::uint32_t max_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.neighbors(v).size());
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::vector<VertexId>> buckets(max_deg + 1);
  // Ids are pushed in increasing order, so every bucket starts as a valid heap.
  for (VertexId v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  for (auto& b : buckets) std::make_heap(b.begin(), b.end(), std::greater<>{});

  std::vector<std::uint8_t> removed(n, 0);
  std::vector<VertexId> order;
  std::vector<WeightUnits> removal;
  order.reserve(n);
  removal.reserve(n);

  std::uint32_t cur = 0;
  while (order.size() < n) {
    auto& bucket = buckets[cur];
    if (bucket.empty()) {
      ++cur;
      continue;
    }
    std::pop_heap(bucket.begin(), bucket.end(), std::greater<>{});
    VertexId v = bucket.back();
    bucket.pop_back();
    if (removed[v] || deg[v] != cur) continue;

    removed[v] = 1;
    order.push_back(v);
    removal.push_back(static_cast<WeightUnits>(cur) * unit);
    for (VertexId u : g.neighbors(v)) {
      if (removed[u]) continue;
      auto& target = buckets[--deg[u]];
      target.push_back(u);
      std::push_heap(target.begin(), target.end(), std::greater<>{});
    }
    // Neighbours drop by one, so the minimum falls by at most one.
    if (cur > 0) --cur;
  }
  return PeelingTrace(std::move(order), std::move(removal), g.total_units(), g.weight_scale());
}

PeelingTrace peel_heap(const WeightedGraph& g) {
  const VertexId n = g.n();
  using Entry = std::pair<WeightUnits, VertexId>;
  std::vector<WeightUnits> deg(n);
  std::vector<Entry> init;
  init.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree_units(v);
    init.emplace_back(deg[v], v);
  }
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap(std::greater<>{},
                                                                      std::move(init));
  std::vector<std::uint8_t> removed(n, 0);
  std::vector<VertexId> order;
  std::vector<WeightUnits> removal;
  order.reserve(n);
  removal.reserve(n);

  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (removed[v] || deg[v] != d) continue;
    removed[v] = 1;
    order.push_back(v);
    removal.push_back(d);
    auto nbrs = g.neighbors(v);
    auto ws = g.neighbor_weights(v);
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      VertexId u = nbrs[j];
      if (removed[u]) continue;
      deg[u] -= ws[j];
      heap.emplace(deg[u], u);
    }
  }
  return PeelingTrace(std::move(order), std::move(removal), g.total_units(), g.weight_scale());
}

}  // namespace

PeelingTrace::PeelingTrace(std::vector<VertexId> order, std::vector<WeightUnits> removal_units,
                           WeightUnits total_units, WeightUnits scale)
    : order_(std::move(order)), removal_(std::move(removal_units)), scale_(scale) {
  const std::size_t n = order_.size();
  suffix_.assign(n + 1, 0);
  suffix_[n] = total_units;
  for (std::size_t i = n; i >= 1; --i) suffix_[i - 1] = suffix_[i] - removal_[n - i];
}

VertexSet PeelingTrace::suffix(std::size_t i) const {
  return VertexSet(std::vector<VertexId>(order_.end() - static_cast<std::ptrdiff_t>(i),
                                         order_.end()));
}

PeelingTrace peel(const WeightedGraph& g) {
  return g.uniform_weights() ? peel_buckets(g) : peel_heap(g);
}

CoreResult w_core(const PeelingTrace& trace, const Rational& w) {
  // r is not monotone along the trace, so scan for the largest index.
  const std::size_t n = trace.n();
  for (std::size_t i = n; i >= 1; --i) {
    if (trace.removal_degree(i) >= w) return {w, trace.suffix(i), i};
  }
  return {w, VertexSet{}, 0};
}

CoreResult w_core(const WeightedGraph& g, const Rational& w) { return w_core(peel(g), w); }

SubgraphResult chalk(const WeightedGraph& g, const PeelingTrace& trace, std::size_t k) {
  if (k < 1 || k > g.n()) {
    throw DomainError("k = " + std::to_string(k) + " outside [1, n = " + std::to_string(g.n()) +
                      "]");
  }
  std::size_t best = g.n();
  for (std::size_t i = g.n(); i >= k && i >= 1; --i) {
    if (compare_fractions(trace.suffix_units(i), static_cast<std::int64_t>(i),
                          trace.suffix_units(best), static_cast<std::int64_t>(best)) > 0) {
      best = i;
    }
  }
  return make_result(g, trace.suffix(best), "chalk", Rational(3));
}

SubgraphResult chalk(const WeightedGraph& g, std::size_t k) {
  if (k < 1 || k > g.n()) {
    throw DomainError("k = " + std::to_string(k) + " outside [1, n = " + std::to_string(g.n()) +
                      "]");
  }
  return chalk(g, peel(g), k);
}

SubgraphResult charikar_densest(const WeightedGraph& g) {
  if (g.n() == 0) throw DomainError("densest subgraph of the empty graph");
  SubgraphResult r = chalk(g, 1);
  r.method = "greedy-peel";
  r.guarantee = Rational(2);
  return r;
}

}  // namespace densub
