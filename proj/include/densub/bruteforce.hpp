#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "densub/graph.hpp"

namespace densub {

enum class Problem { kDensest, kDalks, kDamks, kDks };

struct ExactAnswer {
  Problem problem;
  std::optional<std::size_t> k;
  Rational optimum;
  VertexSet witness;
};

/// Best induced weight for every subset size, by full enumeration of the
/// 2^n subsets. Ties within a size go to the lexicographically smallest
/// sorted vertex list.
class SubsetProfile {
 public:
  // Throws CapacityError when g.n() > limit (limit itself is capped at 30).
  explicit SubsetProfile(const WeightedGraph& g, VertexId limit = 20);

  VertexId n() const { return n_; }
  // Max W(H) over |H| = size, in weight units. size in [0, n].
  WeightUnits best_units(std::size_t size) const { return best_[size]; }
  VertexSet best_set(std::size_t size) const;

  // Max density over nonempty H with lo <= |H| <= hi.
  ExactAnswer best_in_range(Problem p, std::optional<std::size_t> k, std::size_t lo,
                            std::size_t hi) const;
  // max_H W(H) - alpha|H| including the empty set.
  Rational max_excess(const Rational& alpha) const;

 private:
  VertexId n_ = 0;
  WeightUnits scale_ = 1;
  std::vector<WeightUnits> best_;
  std::vector<std::uint64_t> best_mask_;
};

// k is ignored for kDensest. Throws DomainError when k is infeasible.
ExactAnswer brute_force(const WeightedGraph& g, Problem problem, std::size_t k = 0,
                        VertexId limit = 20);

// True when sorted(a) precedes sorted(b) lexicographically.
bool lex_less(std::uint64_t a, std::uint64_t b);

/// Test corpus. For limit_n <= 5: every labelled unit-weight graph on exactly
/// limit_n vertices. For 6..8: cliques, stars, paths, clique-plus-pendant,
/// two bridged cliques and `samples` seeded random graphs on limit_n
/// vertices.
std::vector<WeightedGraph> corpus(VertexId limit_n, std::uint64_t seed = 1,
                                  std::size_t samples = 64);

// `count` random graphs with 1..max_n vertices, per-graph edge probability
// drawn from a spread of densities and weights j/100 for j in [1, 1000].
std::vector<WeightedGraph> random_weighted_corpus(std::uint64_t seed, std::size_t count,
                                                  VertexId max_n);

// Random simple unit-weight graph with exactly m distinct edges.
WeightedGraph random_graph(VertexId n, std::size_t m, std::uint64_t seed);

}  // namespace densub
