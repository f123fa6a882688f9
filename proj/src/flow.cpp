#include "densub/flow.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "densub/errors.hpp"

namespace densub {
namespace {

// Residual graph for Dinic's algorithm. Arc 2i is the forward copy of input
// arc i and 2i+1 its reverse.
class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : n_(net.nodes), source_(net.source), sink_(net.sink), first_(net.nodes + 1, 0) {
    for (const Arc& a : net.arcs) {
      ++first_[a.from + 1];
      ++first_[a.to + 1];
    }
    for (NodeId v = 0; v < n_; ++v) first_[v + 1] += first_[v];
    to_.resize(2 * net.arcs.size());
    cap_.resize(2 * net.arcs.size());
    std::vector<std::size_t> fill(first_.begin(), first_.end() - 1);
    adj_.resize(2 * net.arcs.size());
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
      const Arc& a = net.arcs[i];
      to_[2 * i] = a.to;
      cap_[2 * i] = a.capacity;
      to_[2 * i + 1] = a.from;
      cap_[2 * i + 1] = 0;
      adj_[fill[a.from]++] = 2 * i;
      adj_[fill[a.to]++] = 2 * i + 1;
    }
  }

  Capacity run() {
    Capacity total = 0;
    level_.assign(n_, -1);
    while (bfs()) {
      it_.assign(first_.begin(), first_.end() - 1);
      while (Capacity pushed = dfs(source_, std::numeric_limits<Capacity>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  std::vector<std::uint8_t> reachable_from_source() const {
    std::vector<std::uint8_t> seen(n_, 0);
    std::vector<NodeId> stack{source_};
    seen[source_] = 1;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (std::size_t j = first_[v]; j < first_[v + 1]; ++j) {
        std::size_t a = adj_[j];
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          stack.push_back(to_[a]);
        }
      }
    }
    return seen;
  }

  std::vector<std::uint8_t> reaching_sink() const {
    std::vector<std::uint8_t> seen(n_, 0);
    std::vector<NodeId> stack{sink_};
    seen[sink_] = 1;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      // Arc a enters v from to_[a ^ 1]; that node reaches v if a has residual.
      for (std::size_t j = first_[v]; j < first_[v + 1]; ++j) {
        std::size_t into = adj_[j] ^ 1;
        NodeId u = to_[adj_[j]];
        if (cap_[into] > 0 && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    return seen;
  }

 private:
  bool bfs() {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<NodeId> queue{source_};
    level_[source_] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      NodeId v = queue[h];
      for (std::size_t j = first_[v]; j < first_[v + 1]; ++j) {
        std::size_t a = adj_[j];
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[v] + 1;
          queue.push_back(to_[a]);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  Capacity dfs(NodeId v, Capacity limit) {
    if (v == sink_) return limit;
    for (std::size_t& j = it_[v]; j < first_[v + 1]; ++j) {
      std::size_t a = adj_[j];
      NodeId w = to_[a];
      if (cap_[a] <= 0 || level_[w] != level_[v] + 1) continue;
      if (Capacity got = dfs(w, std::min(limit, cap_[a])); got > 0) {
        cap_[a] -= got;
        cap_[a ^ 1] += got;
        return got;
      }
    }
    return 0;
  }

  NodeId n_;
  NodeId source_;
  NodeId sink_;
  std::vector<std::size_t> first_;
  std::vector<std::size_t> adj_;
  std::vector<NodeId> to_;
  std::vector<Capacity> cap_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

Capacity checked(__int128 x) {
  if (x > std::numeric_limits<Capacity>::max() || x < 0) {
    throw std::overflow_error("flow capacity overflow");
  }
  return static_cast<Capacity>(x);
}

VertexSet vertices_on_side(const WeightedGraph& g, const std::vector<std::uint8_t>& side) {
  std::vector<VertexId> ids;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (side[vertex_node(v)]) ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

}  // namespace

void FlowNetwork::add_arc(NodeId from, NodeId to, Capacity capacity) {
  arcs.push_back({from, to, capacity});
}

MinCut max_flow_min_cut(const FlowNetwork& net) {
  if (net.source == net.sink) throw DomainError("flow network source equals sink");
  if (net.source >= net.nodes || net.sink >= net.nodes) {
    throw DomainError("flow network terminal out of range");
  }
  if (net.capacity_scale <= 0) throw DomainError("flow network capacity scale must be positive");
  for (const Arc& a : net.arcs) {
    if (a.capacity < 0) throw DomainError("negative arc capacity");
    if (a.from >= net.nodes || a.to >= net.nodes) throw DomainError("arc endpoint out of range");
  }
  Dinic dinic(net);
  MinCut cut;
  cut.raw_value = dinic.run();
  cut.value = Rational(cut.raw_value, net.capacity_scale);
  cut.min_source_side = dinic.reachable_from_source();
  auto reach = dinic.reaching_sink();
  cut.max_source_side.resize(net.nodes);
  for (NodeId v = 0; v < net.nodes; ++v) cut.max_source_side[v] = !reach[v];
  return cut;
}

FlowNetwork excess_network(const WeightedGraph& g, const Rational& alpha) {
  if (alpha < Rational(0)) throw DomainError("alpha must be non-negative");
  const __int128 q = alpha.den();
  const __int128 p = alpha.num();
  FlowNetwork net;
  net.nodes = static_cast<NodeId>(2 + g.n() + g.m());
  net.source = 0;
  net.sink = 1;
  net.capacity_scale = checked(q * g.weight_scale());
  const Capacity infinite = checked(q * g.total_units() + 1);
  const Capacity to_sink = checked(p * g.weight_scale());
  net.arcs.reserve(g.n() + 3 * g.m());
  for (std::size_t e = 0; e < g.m(); ++e) {
    Edge edge = g.edge(e);
    auto node = static_cast<NodeId>(2 + g.n() + e);
    net.add_arc(net.source, node, checked(q * edge.w));
    net.add_arc(node, vertex_node(edge.u), infinite);
    net.add_arc(node, vertex_node(edge.v), infinite);
  }
  for (VertexId v = 0; v < g.n(); ++v) net.add_arc(vertex_node(v), net.sink, to_sink);
  return net;
}

ExcessMaximizer max_excess(const WeightedGraph& g, const Rational& alpha) {
  FlowNetwork net = excess_network(g, alpha);
  MinCut cut = max_flow_min_cut(net);
  ExcessMaximizer out;
  out.alpha = alpha;
  out.value = g.total_weight() - cut.value;
  out.smallest = vertices_on_side(g, cut.min_source_side);
  out.largest = vertices_on_side(g, cut.max_source_side);
  return out;
}

Rational NestedFamily::value(const Rational& alpha) const {
  Rational best;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    Rational v = Rational(chain_units[j], weight_scale) -
                 alpha * Rational(static_cast<std::int64_t>(chain[j].size()));
    if (j == 0 || v > best) best = v;
  }
  return best;
}

namespace {

struct ChainBuilder {
  const WeightedGraph& g;
  NestedFamily& family;

  Rational line(WeightUnits units, std::size_t size, const Rational& alpha) const {
    return Rational(units, g.weight_scale()) - alpha * Rational(static_cast<std::int64_t>(size));
  }

  // lo is optimal somewhere left of hi and strictly larger. Appends every
  // breakpoint in (lo, hi] order and every chain member after lo, ending at hi.
  void split(const VertexSet& lo, WeightUnits lo_units, const VertexSet& hi,
             WeightUnits hi_units) {
    const Rational alpha(lo_units - hi_units,
                         static_cast<std::int64_t>(lo.size() - hi.size()) * g.weight_scale());
    ExcessMaximizer best = max_excess(g, alpha);
    if (best.value == line(lo_units, lo.size(), alpha)) {
      family.breakpoints.push_back(alpha);
      family.chain.push_back(hi);
      family.chain_units.push_back(hi_units);
      return;
    }
    WeightUnits mid_units = induced_units(g, best.largest);
    split(lo, lo_units, best.largest, mid_units);
    split(best.largest, mid_units, hi, hi_units);
  }
};

}  // namespace

NestedFamily parametric_family(const WeightedGraph& g) {
  NestedFamily family;
  family.weight_scale = g.weight_scale();
  VertexSet all = VertexSet::range(g.n());
  family.chain.push_back(all);
  family.chain_units.push_back(g.total_units());
  if (g.n() == 0) return family;
  ChainBuilder{g, family}.split(all, g.total_units(), VertexSet{}, 0);
  return family;
}

}  // namespace densub
