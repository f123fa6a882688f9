#include "densub/solvers.hpp"

#include <algorithm>
#include <string>

#include "densub/bruteforce.hpp"
#include "densub/errors.hpp"
#include "densub/peeling.hpp"

namespace densub {
namespace {

void require_k(const WeightedGraph& g, std::size_t k) {
  if (k < 1 || k > g.n()) {
    throw DomainError("k = " + std::to_string(k) + " outside [1, n = " + std::to_string(g.n()) +
                      "]");
  }
}

}  // namespace

SubgraphResult exact_densest(const WeightedGraph& g) {
  if (g.n() == 0) throw DomainError("densest subgraph of the empty graph");
  NestedFamily family = parametric_family(g);
  std::size_t best = 0;
  for (std::size_t j = 1; j < family.chain.size(); ++j) {
    if (family.chain[j].empty()) continue;
    if (compare_fractions(family.chain_units[j], static_cast<std::int64_t>(family.chain[j].size()),
                          family.chain_units[best],
                          static_cast<std::int64_t>(family.chain[best].size())) > 0) {
      best = j;
    }
  }
  return make_result(g, family.chain[best], "parametric-flow", ExactGuarantee{});
}

SubgraphResult dalks_2approx(const WeightedGraph& g, const NestedFamily& family, std::size_t k) {
  require_k(g, k);
  VertexSet best;
  WeightUnits best_units = -1;
  for (const VertexSet& member : family.chain) {
    VertexSet candidate = member.size() < k ? pad_to_size(g, member, k) : member;
    WeightUnits units = induced_units(g, candidate);
    if (best_units < 0 ||
        compare_fractions(units, static_cast<std::int64_t>(candidate.size()), best_units,
                          static_cast<std::int64_t>(best.size())) > 0) {
      best = std::move(candidate);
      best_units = units;
    }
  }
  return make_result(g, std::move(best), "parametric-flow-padded", Rational(2));
}

SubgraphResult dalks_2approx(const WeightedGraph& g, std::size_t k) {
  require_k(g, k);
  return dalks_2approx(g, parametric_family(g), k);
}

VertexSet pad_to_size(const WeightedGraph& g, const VertexSet& s, std::size_t k) {
  g.check_set(s);
  if (k > g.n()) {
    throw DomainError("cannot pad to " + std::to_string(k) + " vertices in a graph with " +
                      std::to_string(g.n()));
  }
  if (s.size() > k) {
    throw DomainError("set of size " + std::to_string(s.size()) + " already exceeds " +
                      std::to_string(k));
  }
  std::vector<VertexId> outside;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!s.contains(v)) outside.push_back(v);
  }
  const std::size_t need = k - s.size();
  auto by_degree = [&](VertexId a, VertexId b) {
    if (g.degree_units(a) != g.degree_units(b)) return g.degree_units(a) > g.degree_units(b);
    return a < b;
  };
  std::partial_sort(outside.begin(), outside.begin() + static_cast<std::ptrdiff_t>(need),
                    outside.end(), by_degree);
  std::vector<VertexId> ids = s.ids();
  ids.insert(ids.end(), outside.begin(), outside.begin() + static_cast<std::ptrdiff_t>(need));
  return VertexSet(std::move(ids));
}

VertexSet greedy_shrink(const WeightedGraph& g, const VertexSet& u, std::size_t k) {
  g.check_set(u);
  if (k < 1 || k > u.size()) {
    throw DomainError("cannot shrink a set of size " + std::to_string(u.size()) + " to " +
                      std::to_string(k));
  }
  PeelingTrace trace = peel(g.induced(u));
  std::vector<VertexId> ids;
  for (VertexId local : trace.suffix(k)) ids.push_back(u.ids()[local]);
  return VertexSet(std::move(ids));
}

VertexSet damks_bruteforce_oracle(const WeightedGraph& g, std::size_t k, VertexId limit) {
  return brute_force(g, Problem::kDamks, k, limit).witness;
}

VertexSet damks_peel_heuristic(const WeightedGraph& g, std::size_t k) {
  require_k(g, k);
  PeelingTrace trace = peel(g);
  std::size_t best = k;
  for (std::size_t i = k; i >= 1; --i) {
    if (compare_fractions(trace.suffix_units(i), static_cast<std::int64_t>(i),
                          trace.suffix_units(best), static_cast<std::int64_t>(best)) > 0) {
      best = i;
    }
  }
  return trace.suffix(best);
}

DamksOracleSpec exact_damks_oracle(VertexId limit) {
  return {"exact", Rational(1), Rational(1), false,
          [limit](const WeightedGraph& g, std::size_t k) {
            return damks_bruteforce_oracle(g, k, limit);
          }};
}

DamksOracleSpec peel_damks_oracle() {
  return {"peel", Rational(1), Rational(1), true,
          [](const WeightedGraph& g, std::size_t k) { return damks_peel_heuristic(g, k); }};
}

Rational reduction_ratio(const Rational& beta, const Rational& gamma) {
  return Rational(4) * (gamma * gamma + gamma * beta);
}

DksOutcome dks_via_damks(const WeightedGraph& g, std::size_t k, const DamksOracleSpec& oracle) {
  require_k(g, k);
  if (!oracle.procedure) throw ContractViolation("oracle '" + oracle.name + "' has no procedure");
  const Rational size_cap = oracle.beta * Rational(static_cast<std::int64_t>(k));

  DksOutcome out;
  ReductionTrace& trace = out.trace;
  WeightedGraph remaining = g;
  // With k = 1 every candidate has density 0 and no oracle answer can hold an
  // edge, so the loop only runs for k >= 2.
  while (k >= 2 && remaining.m() > 0) {
    VertexSet h = oracle.procedure(remaining, k);
    remaining.check_set(h);
    if (h.empty()) {
      throw ContractViolation("oracle '" + oracle.name + "' returned an empty set with " +
                              std::to_string(remaining.m()) + " edges left");
    }
    if (Rational(static_cast<std::int64_t>(h.size())) > size_cap) {
      throw ContractViolation("oracle '" + oracle.name + "' returned " +
                              std::to_string(h.size()) + " vertices, above beta*k = " +
                              size_cap.to_string());
    }
    WeightUnits units = induced_units(remaining, h);
    if (units == 0) {
      throw ContractViolation("oracle '" + oracle.name + "' returned a set with no edges while " +
                              std::to_string(remaining.m()) + " remain");
    }
    remaining = remaining.without_edges_inside(h);
    Rational d = density_of(units, h.size(), g.weight_scale());
    trace.rounds.push_back({std::move(h), units, d});
  }

  // The round where the prefix weight first reaches W(H*)/2 is unknown
  // without H*, so every prefix contributes a size-k candidate.
  auto add_candidate = [&](const VertexSet& u) {
    VertexSet c = u.size() <= k ? pad_to_size(g, u, k) : greedy_shrink(g, u, k);
    trace.candidate_densities.push_back(density(g, c).density);
    trace.candidates.push_back(std::move(c));
  };
  VertexSet prefix;
  add_candidate(prefix);
  for (const ReductionRound& round : trace.rounds) {
    prefix = prefix.united(round.subgraph);
    trace.prefix_unions.push_back(prefix);
    add_candidate(prefix);
  }
  for (std::size_t t = 1; t < trace.candidates.size(); ++t) {
    if (trace.candidate_densities[t] > trace.candidate_densities[trace.chosen]) trace.chosen = t;
  }

  Guarantee guarantee = oracle.heuristic ? Guarantee{HeuristicGuarantee{}}
                                         : Guarantee{reduction_ratio(oracle.beta, oracle.gamma)};
  out.result = make_result(g, trace.candidates[trace.chosen], "dks-via-damks/" + oracle.name,
                           std::move(guarantee));
  return out;
}

}  // namespace densub
