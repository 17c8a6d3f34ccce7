#include <random>

#include "doctest.h"
#include "linfor/constructions.hpp"
#include "linfor/enumerate.hpp"
#include "linfor/forests.hpp"
#include "oracles.hpp"

using namespace linfor;

namespace {

bool witness_is_forest(const Graph& g, const ForestResult& f) {
  for (const Edge& e : f.witness) {
    if (!g.has_edge(e.u, e.v)) return false;
  }
  return static_cast<int>(f.witness.size()) == f.size && is_linear_forest(g.order(), f.witness);
}

bool witness_is_matching(const Graph& g, const MatchingResult& m) {
  std::uint64_t used = 0;
  for (const Edge& e : m.witness) {
    if (!g.has_edge(e.u, e.v)) return false;
    const std::uint64_t ends = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    if (used & ends) return false;
    used |= ends;
  }
  return static_cast<int>(m.witness.size()) == m.size;
}

}  // namespace

TEST_SUITE("forests") {
  TEST_CASE("fixed linear forests") {
    CHECK(max_linear_forest(complete_graph(4)).size == 3);
    CHECK(max_linear_forest(cycle_graph(5)).size == 4);
    CHECK(max_linear_forest(star_graph(5)).size == 2);
    CHECK(max_linear_forest(Graph(0)).size == 0);
    CHECK(is_lk_free(star_graph(5), 3));
    CHECK_FALSE(is_lk_free(star_graph(5), 2));
    CHECK(is_lk_free(complete_graph(4), 4));
  }

  TEST_CASE("fixed matchings") {
    CHECK(matching_number(complete_graph(5)).size == 2);
    CHECK(matching_number(cycle_graph(6)).size == 3);
    CHECK(matching_number(star_graph(5)).size == 1);
    CHECK(matching_number(build_host({12, 5, 2, HostVariant::plain})).size == 2);
    CHECK(matching_number(build_host({12, 4, 1, HostVariant::plus})).size == 3);
  }

  TEST_CASE("agree with edge-subset search on all graphs up to five vertices") {
    for (int n = 0; n <= 5; ++n) {
      for_each_graph(n, [&](std::uint64_t, const Graph& g) {
        const ForestResult f = max_linear_forest(g);
        const MatchingResult m = matching_number(g);
        REQUIRE(f.size == oracle::linear_forest(g));
        REQUIRE(m.size == oracle::matching(g));
        REQUIRE(witness_is_forest(g, f));
        REQUIRE(witness_is_matching(g, m));
      });
    }
  }

  TEST_CASE("agree with edge-subset search on random sparse graphs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = std::uniform_int_distribution<int>(6, 12)(rng);
      const Graph g = oracle::random_graph(n, 2.6 / n, rng);
      if (g.edge_count() > 18) continue;
      const ForestResult f = max_linear_forest(g);
      REQUIRE(f.size == oracle::linear_forest(g));
      REQUIRE(matching_number(g).size == oracle::matching(g));
      REQUIRE(witness_is_forest(g, f));
    }
  }

  TEST_CASE("subgraph table agrees with the searches up to six vertices") {
    for (int n = 0; n <= 6; ++n) {
      const SubgraphTable table = SubgraphTable::build(n);
      REQUIRE(table.size() == (std::uint64_t{1} << edge_slots(n)));
      for_each_graph(n, [&](std::uint64_t mask, const Graph& g) {
        REQUIRE(table.forest(mask) == max_linear_forest(g).size);
        REQUIRE(table.matching(mask) == matching_number(g).size);
      });
    }
  }

  TEST_CASE("matchings and linear forests on every graph up to seven vertices") {
    const SubgraphTable table = SubgraphTable::build(7);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
      const int lf = table.forest(mask);
      const int nu = table.matching(mask);
      REQUIRE(lf >= nu);
      REQUIRE(lf <= 2 * nu);  // so nu <= k forces L_{2k+1}-freeness
    }
  }

  TEST_CASE("dense hosts stay exact") {
    for (int n = 20; n <= 40; n += 5) {
      for (int k = 7; k <= 9; ++k) {
        const Graph g = build_host({n, k, (k - 1) / 2, HostVariant::plain});
        const ForestResult f = max_linear_forest(g);
        CHECK(f.size == k - 1);
        CHECK(witness_is_forest(g, f));
      }
    }
  }

  TEST_CASE("budget exhaustion is distinct from success") {
    Graph tree(31);  // complete binary tree: too large for the component DP
    for (int v = 1; v < 31; ++v) tree.add_edge(v, (v - 1) / 2);
    CHECK_THROWS_AS(max_linear_forest(tree, 10), SearchBudgetExceeded);
    CHECK(max_linear_forest(tree).size == 20);
  }
}
