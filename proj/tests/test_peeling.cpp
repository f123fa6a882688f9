#include <doctest.h>

#include <random>

#include "densub/errors.hpp"
#include "densub/peeling.hpp"
#include "fixtures.hpp"
#include "naive_oracle.hpp"

using namespace densub;
using namespace densub::testing;

namespace {

// O(n^2) peel straight from the definition.
std::vector<VertexId> naive_peel_order(const WeightedGraph& g) {
  std::vector<std::uint8_t> gone(g.n(), 0);
  std::vector<VertexId> order;
  for (VertexId step = 0; step < g.n(); ++step) {
    VertexId pick = 0;
    WeightUnits best = -1;
    for (VertexId v = 0; v < g.n(); ++v) {
      if (gone[v]) continue;
      WeightUnits d = 0;
      auto nbrs = g.neighbors(v);
      auto ws = g.neighbor_weights(v);
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        if (!gone[nbrs[j]]) d += ws[j];
      }
      if (best < 0 || d < best) {
        best = d;
        pick = v;
      }
    }
    gone[pick] = 1;
    order.push_back(pick);
  }
  return order;
}

// Union of every subset whose induced min weighted degree is >= w.
VertexSet naive_core(const WeightedGraph& g, const Rational& w) {
  std::uint32_t core = 0;
  for (std::uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
    bool ok = true;
    for (VertexId v = 0; v < g.n() && ok; ++v) {
      if (!((mask >> v) & 1u)) continue;
      WeightUnits d = 0;
      auto nbrs = g.neighbors(v);
      auto ws = g.neighbor_weights(v);
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        if ((mask >> nbrs[j]) & 1u) d += ws[j];
      }
      ok = Rational(d, g.weight_scale()) >= w;
    }
    if (ok) core |= mask;
  }
  std::vector<VertexId> ids;
  for (VertexId v = 0; v < g.n(); ++v) {
    if ((core >> v) & 1u) ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

}  // namespace

TEST_CASE("peel: star with three leaves") {
  PeelingTrace t = peel(star3());
  // At H_2 = {0, 3} both have degree 1; the smaller id goes first.
  CHECK(t.order() == std::vector<VertexId>{1, 2, 0, 3});
  CHECK(t.removal_degree(4) == Rational(1));
  CHECK(t.removal_degree(3) == Rational(1));
  CHECK(t.removal_degree(2) == Rational(1));
  CHECK(t.removal_degree(1) == Rational(0));
  CHECK(t.suffix_density(4) == Rational(3, 4));
  CHECK(t.suffix_density(3) == Rational(2, 3));
  CHECK(t.suffix_density(2) == Rational(1, 2));
  CHECK(t.suffix_density(1) == Rational(0));
  for (std::size_t i = 1; i <= 4; ++i) {
    CHECK(density(star3(), t.suffix(i)).density == t.suffix_density(i));
  }
}

TEST_CASE("peel: triangle conserves weight; empty graph") {
  PeelingTrace t = peel(triangle());
  CHECK(t.removal_units() == std::vector<WeightUnits>{2, 1, 0});
  CHECK(t.suffix_units(3) == 3);
  CHECK(t.suffix_units(0) == 0);
  CHECK(peel(WeightedGraph{}).n() == 0);
}

TEST_CASE("peel matches the definition on random graphs, both paths") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    VertexId n = 1 + static_cast<VertexId>(rng() % 14);
    WeightedGraph g = random_graph_np(rng, n, 0.1 + 0.1 * (trial % 8), trial % 2 == 0);
    PeelingTrace t = peel(g);
    CHECK(t.order() == naive_peel_order(g));
    // determinism
    CHECK(peel(g).order() == t.order());
    WeightUnits sum = 0;
    for (WeightUnits r : t.removal_units()) sum += r;
    CHECK(sum == g.total_units());
    CHECK(t.suffix_units(n) == g.total_units());
    for (std::size_t i = 1; i <= n; ++i) {
      CHECK(t.suffix_units(i - 1) == t.suffix_units(i) - t.removal_units()[n - i]);
      CHECK(density(g, t.suffix(i)).density == t.suffix_density(i));
    }
  }
}

TEST_CASE("uniform non-unit weights take the bucket path correctly") {
  WeightedGraph g(5, {{0, 1, 7}, {0, 2, 7}, {0, 3, 7}, {1, 2, 7}, {1, 3, 7}, {2, 3, 7}, {0, 4, 7}},
                  2);
  PeelingTrace t = peel(g);
  CHECK(t.order() == naive_peel_order(g));
  CHECK(t.removal_degree(5) == Rational(7, 2));
  CHECK(t.suffix_density(4) == Rational(21, 4));
}

TEST_CASE("w_core examples") {
  CHECK(w_core(k4(), Rational(3)).core == VertexSet{0, 1, 2, 3});
  CHECK(w_core(k4(), Rational(7, 2)).core.empty());
  CHECK(w_core(k4(), Rational(7, 2)).index == 0);
  CoreResult c = w_core(triangle_pendant(), Rational(2));
  CHECK(c.core == VertexSet{0, 1, 2});
  CHECK(c.index == 3);
  CHECK(naive_core(triangle_pendant(), Rational(2)) == VertexSet{0, 1, 2});
}

TEST_CASE("w_core equals the maximal min-degree subgraph; cores nest") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    VertexId n = 1 + static_cast<VertexId>(rng() % 9);
    WeightedGraph g = random_graph_np(rng, n, 0.5, trial % 3 == 0);
    PeelingTrace t = peel(g);
    std::vector<Rational> grid;
    for (int j = 0; j <= 12; ++j) grid.push_back(Rational(j, 2) * Rational(g.max_edge_units() + 1, g.weight_scale()) / Rational(3));
    VertexSet previous = VertexSet::range(n);
    for (const Rational& w : grid) {
      VertexSet core = w_core(t, w).core;
      CHECK(core == naive_core(g, w));
      CHECK(core.is_subset_of(previous));
      previous = core;
    }
  }
}

TEST_CASE("large-core weight bound and nonempty d-core on random graphs") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    VertexId n = 2 + static_cast<VertexId>(rng() % 20);
    WeightedGraph g = random_graph_np(rng, n, 0.3, trial % 2 == 0);
    if (g.total_units() == 0) continue;
    PeelingTrace t = peel(g);
    const Rational d = density(g, VertexSet::range(n)).density;
    CHECK_FALSE(w_core(t, d).core.empty());
    for (Rational alpha : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
      VertexSet core = w_core(t, alpha * d).core;
      // The 0-core is the whole graph, so only equality holds at alpha = 0.
      if (alpha.is_zero()) {
        CHECK(induced_weight(g, core) == g.total_weight());
      } else {
        CHECK(induced_weight(g, core) > (Rational(1) - alpha) * g.total_weight());
      }
    }
  }
}

TEST_CASE("chalk examples") {
  SubgraphResult r4 = chalk(triangle_pendant(), 4);
  CHECK(r4.subgraph == VertexSet{0, 1, 2, 3});
  CHECK(r4.density == Rational(1));
  CHECK(naive_dal(triangle_pendant(), 4) == Rational(1));

  // H_4 and H_3 tie at density 1; the larger suffix wins.
  SubgraphResult r3 = chalk(triangle_pendant(), 3);
  CHECK(r3.subgraph == VertexSet{0, 1, 2, 3});
  CHECK(peel(triangle_pendant()).suffix(3) == VertexSet{0, 1, 2});
  CHECK(r3.density == Rational(1));
  CHECK(naive_dal(triangle_pendant(), 3) == Rational(1));

  SubgraphResult p = chalk(path3(), 3);
  CHECK(p.subgraph.size() == 3);
  CHECK(p.density == Rational(2, 3));
  CHECK(guarantee_string(p.guarantee) == "3");

  CHECK_THROWS_AS(chalk(path3(), 4), DomainError);
  CHECK_THROWS_AS(chalk(path3(), 0), DomainError);
}

TEST_CASE("chalk prefers the larger suffix on density ties") {
  // Two disjoint edges: H_4 and H_2 both have density 1/2.
  WeightedGraph g = WeightedGraph::unweighted(4, {{0, 1}, {2, 3}});
  CHECK(chalk(g, 1).subgraph.size() == 4);
}

TEST_CASE("charikar_densest examples") {
  SubgraphResult r = charikar_densest(k4_pendant());
  CHECK(naive_dmax(k4_pendant()) == Rational(3, 2));
  CHECK(r.density >= Rational(3, 4));
  CHECK(guarantee_string(r.guarantee) == "2");

  SubgraphResult e = charikar_densest(single_edge());
  CHECK(e.subgraph == VertexSet{0, 1});
  CHECK(e.density == Rational(1, 2));

  SubgraphResult t = charikar_densest(triangle());
  CHECK(t.subgraph == VertexSet{0, 1, 2});
  CHECK(t.density == Rational(1));

  CHECK_THROWS_AS(charikar_densest(WeightedGraph{}), DomainError);
}

TEST_CASE("chalk and charikar ratios against the naive oracle") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    VertexId n = 1 + static_cast<VertexId>(rng() % 7);
    WeightedGraph g = random_graph_np(rng, n, 0.2 + 0.1 * (trial % 7), trial % 2 == 1);
    PeelingTrace t = peel(g);
    for (std::size_t k = 1; k <= n; ++k) {
      SubgraphResult r = chalk(g, t, k);
      CHECK(r.subgraph.size() >= k);
      CHECK(r.density * Rational(3) >= naive_dal(g, k));
    }
    CHECK(charikar_densest(g).density * Rational(2) >= naive_dmax(g));
  }
}
