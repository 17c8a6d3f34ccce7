// Acceptance run: one PASS/FAIL line per criterion. Every comparison against a
// closed form is exact (tolerance 0); the only other limits are the timing
// bounds pinned below.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "linfor/census.hpp"
#include "linfor/cliques.hpp"
#include "linfor/constructions.hpp"
#include "linfor/enumerate.hpp"
#include "linfor/forests.hpp"
#include "linfor/graph6.hpp"
#include "linfor/transforms.hpp"
#include "linfor/verify.hpp"
#include "oracles.hpp"

using namespace linfor;

namespace {

constexpr std::uint64_t kExactTolerance = 0;          // |oracle - formula| allowed for equalities
constexpr double kClosedFormSeconds = 1.0;            // closed-form evaluation at n = 10^5
constexpr int kRandomTrials = 10000;                  // randomized cases per property
constexpr int kMaxExhaustiveOrder = 7;                // exhaustive censuses run for n <= 7
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::string tuple(int n, int k, int r) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" + std::to_string(r);
}

std::uint64_t abs_diff(WideCount a, WideCount b) { return a >= b ? (a - b).to_u64() : (b - a).to_u64(); }

const std::map<int, GraphCensus>& censuses() {
  static const std::map<int, GraphCensus> all = [] {
    std::map<int, GraphCensus> out;
    for (int n = 2; n <= kMaxExhaustiveOrder; ++n) out.emplace(n, GraphCensus::exhaustive(n));
    return out;
  }();
  return all;
}

std::size_t equality_rows(Outcome& o, int r_lo, int r_hi) {
  std::size_t rows = 0;
  for (const auto& [n, census] : censuses()) {
    for (int k = 2; k < n; ++k) {
      for (int r = r_lo; r <= std::min(r_hi, n); ++r) {
        const TheoremReport rep = brute_ex(census, r, k);
        ++rows;
        o.expect(rep.kind == "equality" && abs_diff(rep.oracle_value, rep.formula_value) <= kExactTolerance &&
                     rep.formula_value == forest_formula(n, k, r),
                 tuple(n, k, r) + " oracle " + rep.oracle_value.to_string() + " formula " +
                     rep.formula_value.to_string());
      }
    }
  }
  return rows;
}

Outcome criterion1() {
  Outcome o;
  const std::size_t rows = equality_rows(o, 2, 2);
  o.detail = std::to_string(rows) + " tuples, 2 <= k < n <= 7, r = 2";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const std::size_t rows = equality_rows(o, 3, 4);
  // ex(8, K_3, L_5) = 10: the formula value, the exhaustive n = 7 value of the
  // same shape, and attainment at n = 8 by the host H(8,5,0) = K_5 + 3K_1.
  o.expect(forest_formula(8, 5, 3) == WideCount{10}, "formula ex(8,K3,L5) != 10");
  const TheoremReport seven = brute_ex(censuses().at(7), 3, 5);
  o.expect(seven.pass && seven.oracle_value == WideCount{10}, "exhaustive n=7 k=5 r=3 max != 10");
  const Graph host = build_host({8, 5, 0, HostVariant::plain});
  o.expect(is_lk_free(host, 5) && count_cliques(host, 3) == WideCount{10}, "H(8,5,0) does not attain 10");
  std::string spot = "n=7 exhaustive + n=8 attainment";
  if (const char* full = std::getenv("LINFOR_ACCEPT_FULL_N8"); full && std::string(full) == "1") {
    const TheoremReport eight = brute_ex(8, 3, 5);
    o.expect(eight.pass && eight.oracle_value == WideCount{10}, "exhaustive n=8 k=5 r=3 max != 10");
    spot = "n=7 and n=8 exhaustive";
  }
  o.detail = std::to_string(rows) + " tuples, r in {3,4}; ex(8,K3,L5)=10 (" + spot + ")";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t rows = 0;
  for (const auto& [n, census] : censuses()) {
    for (int k = 1; k < n; ++k) {
      for (int r = 2; r <= n; ++r) {
        for (int d = 0; d <= (k - 1) / 2; ++d) {
          const TheoremReport rep = brute_ex(census, r, k, d);
          ++rows;
          o.expect(rep.pass && rep.oracle_value <= rep.formula_value,
                   tuple(n, k, r) + " d=" + std::to_string(d) + " oracle " + rep.oracle_value.to_string());
        }
      }
    }
  }
  o.detail = std::to_string(rows) + " tuples n <= 7, bound + attainment by both hosts";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t equalities = 0;
  std::size_t bounds = 0;
  for (const auto& [n, census] : censuses()) {
    for (int k = 1; k <= 2; ++k) {
      if (n >= 2 * k + 1) {
        const TheoremReport rep = brute_ex_matching(census, 2, k);
        ++equalities;
        o.expect(rep.kind == "equality" && abs_diff(rep.oracle_value, rep.formula_value) <= kExactTolerance,
                 "matching equality " + tuple(n, k, 2));
      }
      if (n < 2 * k + 2) continue;
      for (int r = 2; r <= n; ++r) {
        for (int d = 0; d <= k; ++d) {
          const TheoremReport rep = brute_ex_matching(census, r, k, d);
          ++bounds;
          o.expect(rep.pass, "matching bound " + tuple(n, k, r) + " d=" + std::to_string(d));
        }
      }
    }
  }
  o.detail = std::to_string(equalities) + " equality + " + std::to_string(bounds) + " bound tuples, n <= 7, k <= 2";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t rows = 0;
  std::size_t samples = 0;
  SuiteOptions options;
  options.seed = kSeed;
  auto absorb = [&](const std::vector<TheoremReport>& suite) {
    for (const TheoremReport& row : suite) {
      ++rows;
      samples += static_cast<std::size_t>(options.samples);
      std::string host;
      for (const auto& [key, value] : row.details) {
        if (key == "host") host = value;
      }
      o.expect(row.pass, "theorem " + row.theorem + " " + host);
    }
  };
  for (int k = 7; k <= 9; ++k) {
    for (int n = 20; n <= 40; ++n) absorb(stability_construction_suite(n, k, options));
  }
  for (int k = 3; k <= 4; ++k) {
    for (int n = 20; n <= 40; ++n) absorb(matching_construction_suite(n, k, options));
  }
  o.detail = std::to_string(rows) + " host rows (k 7..9 forest, k 3..4 matching, n 20..40, d=1), " +
             std::to_string(samples) + " random subgraphs";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t graphs = 0;
  for (int n = 0; n <= 6; ++n) {
    for_each_graph(n, [&](std::uint64_t, const Graph& g) {
      ++graphs;
      const CliqueVector cv = clique_vector(g);
      for (int r = 1; r <= n; ++r) o.expect(cv[r].to_u64() == oracle::cliques(g, r), "exhaustive " + to_graph6(g));
    });
  }
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < kRandomTrials; ++t) {
    const Graph g = oracle::random_graph(0, 10, rng);
    for (int r = 1; r <= g.order(); ++r) o.expect(count_cliques(g, r).to_u64() == oracle::cliques(g, r), "random " + to_graph6(g));
  }
  std::size_t hosts = 0;
  for (int n = 1; n <= 14; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int a = 0; 2 * a <= k; ++a) {
        for (HostVariant v : {HostVariant::plain, HostVariant::plus, HostVariant::plusplus}) {
          const ConstructionParams p{n, k, a, v};
          if (!p.valid()) continue;
          ++hosts;
          const Graph g = build_host(p);
          for (int r = 1; r <= n; ++r) o.expect(host_clique_count(p, r) == count_cliques(g, r), p.name());
        }
      }
    }
  }
  const auto start = std::chrono::steady_clock::now();
  WideCount checksum;
  std::size_t evaluations = 0;
  for (std::int64_t k = 1; k <= 200; ++k) {
    for (std::int64_t a = 0; 2 * a <= k; ++a) {
      for (std::int64_t r = 2; r <= 6; ++r) {
        checksum = checksum + host_clique_count({100000, k, a, HostVariant::plain}, r);
        ++evaluations;
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(seconds < kClosedFormSeconds, "closed form took " + std::to_string(seconds) + " s");
  o.expect(host_clique_count({100000, 5, 2, HostVariant::plain}, 3) == WideCount{1 + 99997}, "h_3(10^5,5,2)");
  std::ostringstream s;
  s << graphs << " exhaustive + " << kRandomTrials << " random graphs, " << hosts << " hosts n <= 14, "
    << evaluations << " closed forms at n=10^5 in " << seconds << " s";
  o.detail = s.str();
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    const SubgraphTable table = SubgraphTable::build(n);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          const std::uint64_t plus = mask | (std::uint64_t{1} << slot_of_edge(u, v));
          for (int k = 1; k <= std::min(n, g.degree(u) + g.degree(v)); ++k) {
            ++pairs;
            o.expect((table.forest(mask) <= k - 1) == (table.forest(plus) <= k - 1),
                     to_graph6(g) + " + " + std::to_string(u) + "-" + std::to_string(v) + " k=" + std::to_string(k));
          }
        }
      }
    }
  }
  std::mt19937_64 rng(kSeed + 7);
  std::size_t random_pairs = 0;
  for (int t = 0; t < kRandomTrials; ++t) {
    const Graph g = oracle::random_graph(2, 8, rng);
    const int n = g.order();
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    std::vector<Edge> qualifying;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) >= k) qualifying.push_back({u, v});
      }
    }
    if (qualifying.empty()) continue;
    const Edge e = qualifying[std::uniform_int_distribution<std::size_t>(0, qualifying.size() - 1)(rng)];
    ++random_pairs;
    o.expect(is_lk_free(g, k) == is_lk_free(g.with_edge(e.u, e.v), k), "random " + to_graph6(g));
  }
  o.detail = std::to_string(pairs) + " exhaustive (graph, pair, k) cases n <= 6, " + std::to_string(random_pairs) +
             " random cases n <= 8";
  return o;
}

Outcome criterion8() {
  Outcome o;
  o.expect(g_extremal(1, 2).edges == 1, "g(1,2) != 1");
  o.expect(g_extremal(2, 2).edges == 3, "g(2,2) != 3");
  const GExtremalResult sharp = g_extremal(3, 3);
  o.expect(sharp.edges == 6, "g(3,3) != 6");
  o.expect(sharp.witness.order() == 4 && sharp.witness == complete_graph(4), "g(3,3) witness is not K_4");
  std::ostringstream table;
  for (int k = 1; k <= 5; ++k) {
    const int g2 = g_extremal(k, 2).edges;
    o.expect(2 * g2 <= 3 * k, "g(" + std::to_string(k) + ",2) = " + std::to_string(g2));
    table << " g(" << k << ",*)=";
    for (int delta = 2; delta <= 4; ++delta) {
      const GExtremalResult r = g_extremal(k, delta);
      // The k(delta-1) bound needs delta >= 3; at delta = 2 the
      // triangle already gives g(2,2) = 3 > 2.
      if (delta >= 3) {
        o.expect(r.edges <= k * (delta - 1), "g(" + std::to_string(k) + "," + std::to_string(delta) + ")");
        if (k == 1) o.expect(r.edges == 1, "g(1," + std::to_string(delta) + ") != 1");
        if (k == 2) o.expect(r.edges == delta, "g(2," + std::to_string(delta) + ") != delta");
      }
      o.expect(r.witness.max_degree() <= delta && max_linear_forest(r.witness).size <= k &&
                   r.witness.edge_count() == r.edges,
               "witness for g(" + std::to_string(k) + "," + std::to_string(delta) + ")");
      table << r.edges << (delta < 4 ? "/" : "");
    }
  }
  o.detail = "k <= 5, g(k,2) <= 3k/2, g(k,delta) <= k(delta-1) for delta 3..4:" + table.str();
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 9);
  for (int t = 0; t < kRandomTrials; ++t) {
    const Graph g = oracle::random_graph(0, 16, rng);
    const int k = std::uniform_int_distribution<int>(0, 2 * std::max(1, g.order()))(rng);
    const Graph c = k_closure(g, k);
    o.expect(k_closure(c, k) == c, "closure idempotence " + to_graph6(g));
    o.expect(oracle::closure(g, k, rng) == c, "closure order " + to_graph6(g));
    o.expect(g.order() == 0 || c.min_degree() >= g.min_degree(), "closure min degree " + to_graph6(g));
    Graph h = g;
    for (int u = 0; u < h.order(); ++u) {
      for (int v = u + 1; v < h.order(); ++v) {
        if (!h.has_edge(u, v) && (rng() & 3U) == 0) h.add_edge(u, v);
      }
    }
    o.expect(is_spanning_subgraph(c, k_closure(h, k)), "closure monotonicity " + to_graph6(g));
  }
  for (int t = 0; t < kRandomTrials; ++t) {
    const Graph g = oracle::random_graph(0, 20, rng);
    const int alpha = std::uniform_int_distribution<int>(0, 6)(rng);
    o.expect(core(g, alpha).kept.bits() == oracle::core_vertices(g, alpha, rng), "core order " + to_graph6(g));
  }
  o.detail = std::to_string(kRandomTrials) + " closure trials (idempotence, order, min degree, monotonicity), " +
             std::to_string(kRandomTrials) + " core trials";
  return o;
}

Outcome criterion10() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "--theorem", "2", "--n", "3:7", "--r", "3:4"},
      {"verify", "--theorem", "3", "--n", "7", "--format", "csv"},
      {"verify", "--theorem", "1", "--n", "4:6", "--dedup"},
      {"verify", "--theorem", "6", "--n", "7", "--format", "csv"},
      {"verify", "--theorem", "4", "--mode", "scan", "--n", "7", "--k", "5"},
      {"verify", "--theorem", "4", "--n", "20:24", "--k", "7"},
  };
  for (const auto& base : commands) {
    std::string reference;
    for (const char* threads : {"1", "4", "2"}) {
      auto args = base;
      args.insert(args.end(), {"--threads", threads});
      std::istringstream in;
      std::ostringstream out;
      std::ostringstream err;
      const int code = cli::run(args, in, out, err);
      o.expect(code == cli::kExitPass, base[2] + " exit " + std::to_string(code));
      if (reference.empty()) {
        reference = out.str();
      } else {
        o.expect(out.str() == reference, "theorem " + base[2] + " differs at --threads " + threads);
      }
    }
  }
  o.detail = std::to_string(commands.size()) + " verify commands x threads {1,4,2}";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"forest equality r=2", criterion1},      {"forest equality r=3,4", criterion2},
      {"min-degree bound", criterion3},         {"matching equality/bound", criterion4},
      {"stability host suites", criterion5},   {"clique counter oracle", criterion6},
      {"closure keeps L_k-freeness", criterion7}, {"bounded-degree extremal", criterion8},
      {"transform invariants", criterion9},    {"thread determinism", criterion10},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << o.detail << " [" << static_cast<int>(seconds * 1000) << " ms]\n";
    for (const std::string& f : o.failures) std::cout << "    failed: " << f << "\n";
  }
  return all ? 0 : 1;
}
