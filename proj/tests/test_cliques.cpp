#include <random>

#include "doctest.h"
#include "linfor/cliques.hpp"
#include "linfor/constructions.hpp"
#include "linfor/enumerate.hpp"
#include "oracles.hpp"

using namespace linfor;

TEST_SUITE("cliques") {
  TEST_CASE("fixed counts") {
    CHECK(count_cliques(complete_graph(4), 3) == WideCount{4});
    CHECK(count_cliques(cycle_graph(5), 3) == WideCount{0});
    CHECK(count_cliques(build_host({10, 5, 2, HostVariant::plain}), 3) == WideCount{8});
    CHECK(count_cliques(complete_graph(4), 9) == WideCount{0});
    CHECK_THROWS_AS(count_cliques(complete_graph(4), 0), std::invalid_argument);
  }

  TEST_CASE("clique vectors") {
    CHECK(clique_vector(complete_graph(4)).counts() == std::vector<WideCount>{4, 6, 4, 1});
    CHECK(clique_vector(Graph(3)).counts() == std::vector<WideCount>{3, 0, 0});
    CHECK(clique_vector(cycle_graph(5)).counts() == std::vector<WideCount>{5, 5, 0, 0, 0});
    CHECK(clique_vector(complete_graph(4)).clique_number() == 4);
  }

  TEST_CASE("agrees with the subset counter on all graphs up to five vertices") {
    for (int n = 0; n <= 5; ++n) {
      for_each_graph(n, [&](std::uint64_t, const Graph& g) {
        const CliqueVector cv = clique_vector(g);
        for (int r = 1; r <= n; ++r) REQUIRE(cv[r].to_u64() == oracle::cliques(g, r));
      });
    }
  }

  TEST_CASE("agrees with the subset counter on random graphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
      const Graph g = oracle::random_graph(0, 10, rng);
      for (int r = 1; r <= g.order(); ++r) REQUIRE(count_cliques(g, r).to_u64() == oracle::cliques(g, r));
    }
  }

  TEST_CASE("complete graphs count binomially") {
    const Graph k20 = complete_graph(20);
    for (int r = 1; r <= 20; ++r) CHECK(count_cliques(k20, r) == binomial(20, r));
  }
}
