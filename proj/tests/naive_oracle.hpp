#pragma once

// Test-only ground truth: recounts every subset's weight from the adjacency
// lists, without the subset kernels or the size-profile shortcut.

#include <cstdint>
#include <functional>
#include <optional>

#include "densub/graph.hpp"

namespace densub::testing {

inline WeightUnits naive_weight(const WeightedGraph& g, std::uint32_t mask) {
  WeightUnits sum = 0;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!((mask >> v) & 1u)) continue;
    auto nbrs = g.neighbors(v);
    auto ws = g.neighbor_weights(v);
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      if (nbrs[j] > v && ((mask >> nbrs[j]) & 1u)) sum += ws[j];
    }
  }
  return sum;
}

inline WeightUnits naive_weight(const WeightedGraph& g, const VertexSet& s) {
  std::uint32_t mask = 0;
  for (VertexId v : s) mask |= 1u << v;
  return naive_weight(g, mask);
}

// Max density over nonempty subsets whose size satisfies `keep`.
inline Rational naive_best_density(const WeightedGraph& g,
                                   const std::function<bool(std::size_t)>& keep) {
  std::optional<Rational> best;
  for (std::uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (!keep(size)) continue;
    Rational d(naive_weight(g, mask), static_cast<std::int64_t>(size) * g.weight_scale());
    if (!best || d > *best) best = d;
  }
  return best.value_or(Rational(0));
}

inline Rational naive_dmax(const WeightedGraph& g) {
  return naive_best_density(g, [](std::size_t) { return true; });
}
inline Rational naive_dal(const WeightedGraph& g, std::size_t k) {
  return naive_best_density(g, [k](std::size_t s) { return s >= k; });
}
inline Rational naive_dam(const WeightedGraph& g, std::size_t k) {
  return naive_best_density(g, [k](std::size_t s) { return s <= k; });
}
inline Rational naive_dk(const WeightedGraph& g, std::size_t k) {
  return naive_best_density(g, [k](std::size_t s) { return s == k; });
}

// max over all subsets (including empty) of W(H) - alpha|H|.
inline Rational naive_max_excess(const WeightedGraph& g, const Rational& alpha) {
  Rational best(0);
  for (std::uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
    Rational v = Rational(naive_weight(g, mask), g.weight_scale()) -
                 alpha * Rational(__builtin_popcount(mask));
    if (v > best) best = v;
  }
  return best;
}

}  // namespace densub::testing
