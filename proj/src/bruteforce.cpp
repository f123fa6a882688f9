#include "densub/bruteforce.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "densub/errors.hpp"

namespace densub {
namespace {

constexpr VertexId kHardLimit = 30;
constexpr std::size_t kBatch = 4096;

VertexSet set_of(std::uint64_t mask) {
  std::vector<VertexId> ids;
  while (mask) {
    ids.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return VertexSet(std::move(ids));
}

}  // namespace

bool lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  const std::uint64_t low = diff & (~diff + 1);
  const std::uint64_t above = ~(low * 2 - 1);
  // The first difference in the sorted lists is at `low`. The set holding it
  // is smaller unless the other list has already ended.
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

SubsetProfile::SubsetProfile(const WeightedGraph& g, VertexId limit)
    : n_(g.n()), scale_(g.weight_scale()) {
  limit = std::min(limit, kHardLimit);
  if (g.n() > limit) {
    throw CapacityError("brute force limited to " + std::to_string(limit) + " vertices, graph has " +
                        std::to_string(g.n()));
  }
  best_.assign(n_ + 1, -1);
  best_mask_.assign(n_ + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << n_;
  std::vector<std::int64_t> weights(std::min<std::uint64_t>(kBatch, total));
  const auto edges = g.edge_columns();
  for (std::uint64_t first = 0; first < total; first += weights.size()) {
    std::span<std::int64_t> out(weights.data(),
                                static_cast<std::size_t>(std::min<std::uint64_t>(
                                    weights.size(), total - first)));
    kernels::subset_weights(edges, first, out);
    for (std::size_t j = 0; j < out.size(); ++j) {
      const std::uint64_t mask = first + j;
      const int size = std::popcount(mask);
      if (out[j] > best_[size] || (out[j] == best_[size] && lex_less(mask, best_mask_[size]))) {
        best_[size] = out[j];
        best_mask_[size] = mask;
      }
    }
  }
}

VertexSet SubsetProfile::best_set(std::size_t size) const { return set_of(best_mask_[size]); }

ExactAnswer SubsetProfile::best_in_range(Problem p, std::optional<std::size_t> k, std::size_t lo,
                                         std::size_t hi) const {
  lo = std::max<std::size_t>(lo, 1);
  hi = std::min<std::size_t>(hi, n_);
  if (lo > hi) throw DomainError("no feasible subset size");
  std::size_t best = lo;
  for (std::size_t j = lo + 1; j <= hi; ++j) {
    auto c = compare_fractions(best_[j], static_cast<std::int64_t>(j), best_[best],
                               static_cast<std::int64_t>(best));
    if (c > 0 || (c == 0 && lex_less(best_mask_[j], best_mask_[best]))) best = j;
  }
  return {p, k, density_of(best_[best], best, scale_), best_set(best)};
}

Rational SubsetProfile::max_excess(const Rational& alpha) const {
  Rational best(0);
  for (std::size_t j = 1; j <= n_; ++j) {
    best = std::max(best, Rational(best_[j], scale_) - alpha * Rational(static_cast<std::int64_t>(j)));
  }
  return best;
}

ExactAnswer brute_force(const WeightedGraph& g, Problem problem, std::size_t k, VertexId limit) {
  if (g.n() == 0) throw DomainError("no nonempty subgraph in the empty graph");
  const std::size_t n = g.n();
  if (problem != Problem::kDensest && k < 1) throw DomainError("k must be at least 1");
  if ((problem == Problem::kDalks || problem == Problem::kDks) && k > n) {
    throw DomainError("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  }
  SubsetProfile profile(g, limit);
  switch (problem) {
    case Problem::kDensest:
      return profile.best_in_range(problem, std::nullopt, 1, n);
    case Problem::kDalks:
      return profile.best_in_range(problem, k, k, n);
    case Problem::kDamks:
      return profile.best_in_range(problem, k, 1, k);
    case Problem::kDks:
      break;
  }
  return profile.best_in_range(problem, k, k, k);
}

namespace {

WeightedGraph unit_graph(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, 1});
  return WeightedGraph(n, std::move(edges), 1);
}

void add_clique(std::vector<std::pair<VertexId, VertexId>>& out, VertexId from, VertexId to) {
  for (VertexId a = from; a < to; ++a) {
    for (VertexId b = a + 1; b < to; ++b) out.emplace_back(a, b);
  }
}

WeightedGraph bernoulli_graph(VertexId n, double p, std::mt19937_64& rng, bool weighted) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> hundredths(1, 1000);
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.push_back({a, b, weighted ? hundredths(rng) : 1});
    }
  }
  return WeightedGraph(n, std::move(edges), weighted ? 100 : 1);
}

}  // namespace

std::vector<WeightedGraph> corpus(VertexId limit_n, std::uint64_t seed, std::size_t samples) {
  std::vector<WeightedGraph> out;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 0; a < limit_n; ++a) {
    for (VertexId b = a + 1; b < limit_n; ++b) pairs.emplace_back(a, b);
  }
  if (limit_n <= 5) {
    const std::uint64_t count = std::uint64_t{1} << pairs.size();
    out.reserve(count);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      std::vector<std::pair<VertexId, VertexId>> chosen;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((bits >> i) & 1u) chosen.push_back(pairs[i]);
      }
      out.push_back(unit_graph(limit_n, chosen));
    }
    return out;
  }

  const VertexId n = limit_n;
  std::vector<std::pair<VertexId, VertexId>> e;
  add_clique(e, 0, n);
  out.push_back(unit_graph(n, e));  // clique
  e.clear();
  for (VertexId v = 1; v < n; ++v) e.emplace_back(0, v);
  out.push_back(unit_graph(n, e));  // star
  e.clear();
  for (VertexId v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  out.push_back(unit_graph(n, e));  // path
  e.clear();
  add_clique(e, 0, n - 1);
  e.emplace_back(0, n - 1);
  out.push_back(unit_graph(n, e));  // clique plus pendant
  e.clear();
  add_clique(e, 0, n / 2);
  add_clique(e, n / 2, n);
  e.emplace_back(n / 2 - 1, n / 2);
  out.push_back(unit_graph(n, e));  // two cliques and a bridge

  std::mt19937_64 rng(seed);
  constexpr double kDensities[] = {0.15, 0.3, 0.5, 0.7, 0.9};
  for (std::size_t i = 0; i < samples; ++i) {
    out.push_back(bernoulli_graph(n, kDensities[i % 5], rng, false));
  }
  return out;
}

std::vector<WeightedGraph> random_weighted_corpus(std::uint64_t seed, std::size_t count,
                                                  VertexId max_n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> size(1, std::max<VertexId>(max_n, 1));
  constexpr double kDensities[] = {0.1, 0.25, 0.4, 0.6, 0.8, 1.0};
  std::uniform_int_distribution<int> pick(0, 5);
  std::vector<WeightedGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    VertexId n = size(rng);
    double p = kDensities[pick(rng)];
    out.push_back(bernoulli_graph(n, p, rng, true));
  }
  return out;
}

WeightedGraph random_graph(VertexId n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t max_edges = std::uint64_t{n} * (n > 0 ? n - 1 : 0) / 2;
  if (m > max_edges) {
    throw DomainError(std::to_string(m) + " edges do not fit in a simple graph on " +
                      std::to_string(n) + " vertices");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> keys;
  if (m > max_edges / 2) {
    // Dense request: sample from the full pair list.
    keys.reserve(max_edges);
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) keys.push_back((std::uint64_t{a} << 32) | b);
    }
  } else {
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    keys.reserve(m + m / 8 + 16);
    while (keys.size() < m) {
      while (keys.size() < m + m / 16 + 8) {
        VertexId a = pick(rng), b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        keys.push_back((std::uint64_t{a} << 32) | b);
      }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    }
  }
  std::shuffle(keys.begin(), keys.end(), rng);
  keys.resize(m);
  std::sort(keys.begin(), keys.end());
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t key : keys) {
    edges.push_back({static_cast<VertexId>(key >> 32), static_cast<VertexId>(key & 0xffffffffu), 1});
  }
  return WeightedGraph(n, std::move(edges), 1);
}

}  // namespace densub
