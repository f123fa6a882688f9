#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "densub/flow.hpp"
#include "densub/graph.hpp"
#include "densub/solution.hpp"

namespace densub {

// Densest member of the parametric chain: attains the maximum density.
SubgraphResult exact_densest(const WeightedGraph& g);

// Pads every chain member to at least k vertices and keeps the densest.
// Ratio 2 for the densest at-least-k problem.
SubgraphResult dalks_2approx(const WeightedGraph& g, std::size_t k);
SubgraphResult dalks_2approx(const WeightedGraph& g, const NestedFamily& family, std::size_t k);

// Superset of s with exactly k vertices. Added vertices are the highest
// weighted degree vertices of g not in s, ties to the smallest id.
VertexSet pad_to_size(const WeightedGraph& g, const VertexSet& s, std::size_t k);

// Peels the subgraph induced by u down to exactly k vertices.
VertexSet greedy_shrink(const WeightedGraph& g, const VertexSet& u, std::size_t k);

inline constexpr VertexId kDefaultExactLimit = 20;

/// A densest at-most-k oracle: returns at most beta*k vertices with density
/// at least dam(G,k)/gamma. `heuristic` marks oracles whose gamma is unknown.
struct DamksOracleSpec {
  std::string name;
  Rational beta{1};
  Rational gamma{1};
  bool heuristic = false;
  std::function<VertexSet(const WeightedGraph&, std::size_t)> procedure;
};

// Exact (1,1) oracle by subset enumeration; CapacityError past `limit`.
VertexSet damks_bruteforce_oracle(const WeightedGraph& g, std::size_t k,
                                  VertexId limit = kDefaultExactLimit);
// Densest peel suffix with at most k vertices. No ratio guarantee.
VertexSet damks_peel_heuristic(const WeightedGraph& g, std::size_t k);

DamksOracleSpec exact_damks_oracle(VertexId limit = kDefaultExactLimit);
DamksOracleSpec peel_damks_oracle();

struct ReductionRound {
  VertexSet subgraph;       // H_i, chosen in G_i
  WeightUnits units = 0;    // W_i = W(H_i) inside G_i
  Rational density;         // d_i
};

struct ReductionTrace {
  std::vector<ReductionRound> rounds;
  std::vector<VertexSet> prefix_unions;  // U_t for t = 1..rounds
  // candidates[0] comes from the empty prefix; candidates[t] from U_t.
  std::vector<VertexSet> candidates;
  std::vector<Rational> candidate_densities;
  std::size_t chosen = 0;
};

struct DksOutcome {
  SubgraphResult result;
  ReductionTrace trace;
};

// Densest-k by repeated oracle calls with edge removal between rounds. With a
// (beta, gamma) oracle the ratio is 4(gamma^2 + gamma*beta).
DksOutcome dks_via_damks(const WeightedGraph& g, std::size_t k, const DamksOracleSpec& oracle);

Rational reduction_ratio(const Rational& beta, const Rational& gamma);

}  // namespace densub
