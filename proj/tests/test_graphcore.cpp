#include <random>
#include <stdexcept>

#include "doctest.h"
#include "linfor/graph.hpp"
#include "linfor/graph6.hpp"
#include "oracles.hpp"

using namespace linfor;

TEST_SUITE("graphcore") {
  TEST_CASE("adjacency stays symmetric and simple") {
    Graph g(5);
    g.add_edge(0, 3);
    g.add_edge(3, 0);
    CHECK(g.has_edge(3, 0));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS(g.add_edge(0, 5));
    g.remove_edge(0, 3);
    CHECK(g.edge_count() == 0);
  }

  TEST_CASE("degree sum is twice the edge count") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const Graph g = oracle::random_graph(0, 64, rng);
      int sum = 0;
      for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
      REQUIRE(sum == 2 * g.edge_count());
      REQUIRE(static_cast<int>(g.edges().size()) == g.edge_count());
    }
  }

  TEST_CASE("degree sequences") {
    CHECK(degree_sequence(cycle_graph(5)) == std::vector<int>{2, 2, 2, 2, 2});
    CHECK(degree_sequence(complete_graph(4)) == std::vector<int>{3, 3, 3, 3});
    CHECK(degree_sequence(star_graph(5)) == std::vector<int>{5, 1, 1, 1, 1, 1});
  }

  TEST_CASE("edges between vertex sets") {
    CHECK(edges_between(complete_graph(4), VertexSet{0, 1}, VertexSet{2, 3}) == 4);
    CHECK(edges_between(cycle_graph(5), VertexSet{}, VertexSet::range(5)) == 0);
    CHECK(edges_between(cycle_graph(5), VertexSet::range(5), VertexSet::range(5)) == 5);
  }

  TEST_CASE("induced subgraphs") {
    CHECK(induced_subgraph(complete_graph(5), VertexSet{0, 2, 4}) == complete_graph(3));
    CHECK(induced_subgraph(cycle_graph(5), VertexSet{1, 2}) == complete_graph(2));
    CHECK(induced_subgraph(cycle_graph(5), VertexSet{}).order() == 0);
  }

  TEST_CASE("graph6 fixed records") {
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(parse_graph6("A?") == Graph(2));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(to_graph6(complete_graph(2)) == "A_");
    CHECK(to_graph6(Graph(2)) == "A?");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(complete_graph(5)) == "D~{");
  }

  TEST_CASE("graph6 rejects malformed records") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("D~"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("A_?"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6(" A"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("~?@A"), Graph6Error);
  }

  TEST_CASE("graph6 round trips random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
      const Graph g = oracle::random_graph(0, 62, rng);
      REQUIRE(parse_graph6(to_graph6(g)) == g);
    }
  }
}
