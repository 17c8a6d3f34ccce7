#include <chrono>
#include <stdexcept>

#include "doctest.h"
#include "linfor/cliques.hpp"
#include "linfor/constructions.hpp"
#include "linfor/graph6.hpp"
#include "oracles.hpp"

using namespace linfor;

namespace {

Graph with_isolated(const Graph& g, int extra) { return disjoint_union(g, Graph(extra)); }

std::uint64_t binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("hosts from the definition") {
    CHECK(build_host({6, 3, 1, HostVariant::plain}) == star_graph(5));
    CHECK(build_host({8, 5, 0, HostVariant::plain}) == with_isolated(complete_graph(5), 3));
    Graph plus = star_graph(5);
    plus.add_edge(2, 3);
    CHECK(build_host({6, 3, 1, HostVariant::plus}) == plus);
  }

  TEST_CASE("host parts by hand") {
    const Graph g = build_host({10, 5, 2, HostVariant::plain});
    // A = {0,1}, B = {2}, C = {3..9}
    CHECK(g.degree(0) == 9);
    CHECK(g.degree(2) == 2);
    for (int v = 3; v < 10; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.edge_count() == 3 + 14);
  }

  TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(build_host({5, 3, 2, HostVariant::plain}), std::invalid_argument);
    CHECK_THROWS_AS(build_host({4, 5, 0, HostVariant::plain}), std::invalid_argument);
    CHECK_THROWS_AS(build_host({65, 5, 2, HostVariant::plain}), std::out_of_range);
    CHECK_THROWS_AS(build_host({5, 3, 1, HostVariant::plusplus}), std::invalid_argument);
    CHECK_FALSE(ConstructionParams{5, 3, 2, HostVariant::plain}.valid());
    CHECK(parse_variant("plusplus") == HostVariant::plusplus);
    CHECK_FALSE(parse_variant("double").has_value());
  }

  TEST_CASE("host clique counts") {
    CHECK(host_clique_count({6, 3, 1, HostVariant::plain}, 2) == WideCount{5});
    CHECK(host_clique_count({6, 3, 1, HostVariant::plus}, 2) == WideCount{6});
    CHECK(host_clique_count({10, 5, 2, HostVariant::plusplus}, 3) == WideCount{12});
    CHECK(h_r(10, 5, 2, 3) == WideCount{8});
  }

  TEST_CASE("closed form equals the naive count on every small host") {
    for (int n = 1; n <= 12; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (int a = 0; 2 * a <= k; ++a) {
          for (HostVariant v : {HostVariant::plain, HostVariant::plus, HostVariant::plusplus}) {
            const ConstructionParams p{n, k, a, v};
            if (!p.valid()) continue;
            const Graph g = build_host(p);
            for (int r = 1; r <= n; ++r) {
              INFO(p.name(), " r=", r);
              REQUIRE(host_clique_count(p, r).to_u64() == oracle::cliques(g, r));
            }
          }
        }
      }
    }
  }

  TEST_CASE("h_r against hand binomials") {
    for (int n = 1; n <= 30; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (int a = 0; 2 * a <= k; ++a) {
          for (int r = 1; r <= 6; ++r) {
            const std::uint64_t expected =
                binom(k - a, r) + static_cast<std::uint64_t>(n - k + a) * binom(a, r - 1);
            REQUIRE(h_r(n, k, a, r) == WideCount{expected});
          }
        }
      }
    }
  }

  TEST_CASE("closed form at large order") {
    const auto start = std::chrono::steady_clock::now();
    const WideCount big = h_r(100000, 99999, 40000, 4);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(big > WideCount{0});
    CHECK(elapsed < std::chrono::seconds(1));
    CHECK(h_r(100000, 5, 2, 2) == WideCount{3 + 99997ULL * 2});
  }

  TEST_CASE("overflow is signaled") {
    CHECK_THROWS_AS(h_r(4000000000LL, 4000000000LL, 0, 40), std::overflow_error);
  }

  TEST_CASE("edge count clique bound") {
    CHECK(clique_bound_from_edges(15, 3) == doctest::Approx(20.0));
    CHECK(clique_bound_from_edges(0, 3) == doctest::Approx(0.0));
    CHECK(clique_bound_from_edges(3, 3) == doctest::Approx(1.0));
  }
}
