#include "linfor/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

#include "linfor/cliques.hpp"
#include "linfor/constructions.hpp"
#include "linfor/embedding.hpp"
#include "linfor/enumerate.hpp"
#include "linfor/graph6.hpp"
#include "linfor/stability.hpp"

namespace linfor {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string tuple_text(int n, int r, int k) {
  return "(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ", k=" + std::to_string(k) + ")";
}

void add_witnesses(TheoremReport& report, const Extremum& ext) {
  for (const Witness& w : ext.witnesses) report.witnesses.push_back(to_graph6(w.graph));
}

// Does the host lie in the class (membership test given) and carry exactly
// its closed-form number of r-cliques?
bool host_attains(const ConstructionParams& p, int r, int min_degree, const std::function<bool(const Graph&)>& member,
                  TheoremReport& report) {
  const Graph host = build_host(p);
  const bool in_class = member(host) && (host.order() == 0 || host.min_degree() >= min_degree);
  const bool exact = count_cliques(host, r) == h_r(p.n, p.k, p.a, r);
  const bool ok = in_class && exact;
  report.add_detail("attained_by_" + p.name(), yes_no(ok));
  return ok;
}

}  // namespace

WideCount forest_formula(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t d) {
  return std::max(h_r(n, k, d, r), h_r(n, k, (k - 1) / 2, r));
}

WideCount matching_formula(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t d) {
  return std::max(h_r(n, 2 * k + 1, d, r), h_r(n, 2 * k + 1, k, r));
}

TheoremReport brute_ex(const GraphCensus& census, int r, int k, std::optional<int> d, std::uint64_t budget) {
  const int n = census.order();
  require(k >= 1 && k <= n - 1, "brute_ex needs 1 <= k <= n-1 " + tuple_text(n, r, k));
  require(r >= 2 && r <= n, "brute_ex needs 2 <= r <= n " + tuple_text(n, r, k));
  if (d) require(*d >= 0 && *d <= (k - 1) / 2, "brute_ex needs 0 <= d <= floor((k-1)/2), got d=" + std::to_string(*d));
  const int dd = d.value_or(0);

  TheoremReport report;
  report.theorem = d ? "3" : (r == 2 ? "1" : "2");
  report.kind = d || !census.exhaustive() ? "bound" : "equality";
  report.n = n;
  report.k = k;
  report.r = r;
  if (d) report.d = *d;
  report.formula_value = forest_formula(n, k, r, dd);

  const Extremum ext = census.max_cliques_forest(r, k - 1, dd);
  report.oracle_value = ext.any ? WideCount(ext.value) : WideCount(0);
  add_witnesses(report, ext);
  report.add_detail("source", census.exhaustive() ? "exhaustive" : "input");
  report.add_detail("graphs", std::to_string(census.graph_count()));

  if (report.kind == "equality") {
    report.pass = report.oracle_value == report.formula_value;
  } else {
    report.pass = report.oracle_value <= report.formula_value;
  }
  if (d) {
    auto member = [&](const Graph& g) { return is_lk_free(g, k, budget); };
    const bool low = host_attains({n, k, dd, HostVariant::plain}, r, dd, member, report);
    const bool high = host_attains({n, k, (k - 1) / 2, HostVariant::plain}, r, dd, member, report);
    report.pass = report.pass && low && high;
  }
  return report;
}

TheoremReport brute_ex(int n, int r, int k, std::optional<int> d, const CensusOptions& options) {
  const GraphCensus census = GraphCensus::exhaustive(n, options);
  return brute_ex(census, r, k, d, options.budget);
}

TheoremReport brute_ex_matching(const GraphCensus& census, int r, int k, std::optional<int> d) {
  const int n = census.order();
  const bool equality_form = r == 2 && !d;
  require(k >= 0, "brute_ex_matching needs k >= 0");
  require(r >= 2 && r <= n, "brute_ex_matching needs 2 <= r <= n " + tuple_text(n, r, k));
  if (equality_form) {
    require(n >= 2 * k + 1, "brute_ex_matching needs n >= 2k+1 " + tuple_text(n, r, k));
  } else {
    require(n >= 2 * k + 2, "brute_ex_matching needs n >= 2k+2 for the minimum-degree bound " + tuple_text(n, r, k));
  }
  const int dd = d.value_or(0);
  require(dd >= 0 && dd <= k, "brute_ex_matching needs 0 <= d <= k, got d=" + std::to_string(dd));

  TheoremReport report;
  report.theorem = equality_form ? "5" : "6";
  report.kind = equality_form && census.exhaustive() ? "equality" : "bound";
  report.n = n;
  report.k = k;
  report.r = r;
  if (!equality_form) report.d = dd;
  report.formula_value = matching_formula(n, k, r, dd);

  const Extremum ext = census.max_cliques_matching(r, k, dd);
  report.oracle_value = ext.any ? WideCount(ext.value) : WideCount(0);
  add_witnesses(report, ext);
  report.add_detail("source", census.exhaustive() ? "exhaustive" : "input");
  report.add_detail("graphs", std::to_string(census.graph_count()));

  if (report.kind == "equality") {
    report.pass = report.oracle_value == report.formula_value;
  } else {
    report.pass = report.oracle_value <= report.formula_value;
  }
  if (!equality_form) {
    auto member = [&](const Graph& g) { return matching_number(g).size <= k; };
    const bool low = host_attains({n, 2 * k + 1, dd, HostVariant::plain}, r, dd, member, report);
    const bool high = host_attains({n, 2 * k + 1, k, HostVariant::plain}, r, dd, member, report);
    report.pass = report.pass && low && high;
  }
  return report;
}

TheoremReport brute_ex_matching(int n, int r, int k, std::optional<int> d, const CensusOptions& options) {
  const GraphCensus census = GraphCensus::exhaustive(n, options);
  return brute_ex_matching(census, r, k, d);
}

namespace {

// What differs between the linear-forest and the matching stability statements.
struct Flavor {
  std::string theorem;
  std::function<std::vector<ConstructionParams>(std::int64_t, std::int64_t)> hosts;
  std::function<WideCount(std::int64_t, std::int64_t, std::int64_t, std::int64_t)> threshold;
  int max_r = 0;
  // Parameter measured against k: maximum linear forest or matching number.
  std::function<int(const Graph&)> measure;
  std::function<bool(int)> in_class;
  std::function<StabilityReport(const Graph&, int r, int d, bool membership_known)> classify;
};

Flavor forest_flavor(int k, std::uint64_t budget) {
  StabilityOptions opts{budget, true, false};
  return Flavor{
      "4",
      stability_hosts,
      stability_threshold,
      (k - 3) / 2,
      [budget](const Graph& g) { return max_linear_forest(g, budget).size; },
      [k](int value) { return value <= k - 1; },
      [k, opts](const Graph& g, int r, int d, bool known) {
        StabilityOptions o = opts;
        o.membership_known = known;
        return classify_stability(g, k, r, d, o);
      },
  };
}

Flavor matching_flavor(int k, std::uint64_t budget) {
  StabilityOptions opts{budget, true, false};
  return Flavor{
      "7",
      matching_stability_hosts,
      matching_stability_threshold,
      k - 1,
      [](const Graph& g) { return matching_number(g).size; },
      [k](int value) { return value <= k; },
      [k, opts](const Graph& g, int r, int d, bool known) {
        StabilityOptions o = opts;
        o.membership_known = known;
        return classify_matching_stability(g, k, r, d, o);
      },
  };
}

bool certified_validly(const Graph& g, const StabilityReport& rep) {
  const HostAttempt* hit = rep.certified();
  return hit != nullptr && certificate_valid(g, *hit->certificate);
}

// One representative non-edge per pair of twin classes; swapping twins is an
// automorphism, so these cover every non-edge up to symmetry.
std::vector<Edge> non_edge_representatives(const Graph& g) {
  std::vector<int> representative;
  std::vector<int> class_of(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    int found = -1;
    for (std::size_t c = 0; c < representative.size() && found < 0; ++c) {
      const int u = representative[c];
      VertexSet nu = g.neighbors(u);
      VertexSet nv = g.neighbors(v);
      nu.erase(v);
      nv.erase(u);
      if (nu == nv) found = static_cast<int>(c);
    }
    if (found < 0) {
      found = static_cast<int>(representative.size());
      representative.push_back(v);
    }
    class_of[static_cast<std::size_t>(v)] = found;
  }
  const std::size_t classes = representative.size();
  std::vector<char> seen(classes * classes, 0);
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) continue;
      auto cu = static_cast<std::size_t>(class_of[static_cast<std::size_t>(u)]);
      auto cv = static_cast<std::size_t>(class_of[static_cast<std::size_t>(v)]);
      if (cu > cv) std::swap(cu, cv);
      if (seen[cu * classes + cv]) continue;
      seen[cu * classes + cv] = 1;
      out.push_back({u, v});
    }
  }
  return out;
}

Graph random_proper_subgraph(const Graph& g, std::mt19937_64& rng) {
  std::vector<Edge> edges = g.edges();
  if (edges.empty()) return g;
  std::shuffle(edges.begin(), edges.end(), rng);
  const std::size_t most = std::max<std::size_t>(1, edges.size() / 2);
  const std::size_t remove = std::uniform_int_distribution<std::size_t>(1, most)(rng);
  Graph sub = g;
  for (std::size_t i = 0; i < remove; ++i) sub.remove_edge(edges[i].u, edges[i].v);
  return sub;
}

std::vector<TheoremReport> construction_suite(int n, int k, const Flavor& flavor, const SuiteOptions& options) {
  std::vector<TheoremReport> rows;
  const auto hosts = flavor.hosts(n, k);
  const int top_r = std::max(2, flavor.max_r);
  for (std::size_t index = 0; index < hosts.size(); ++index) {
    const ConstructionParams& p = hosts[index];
    const Graph host = build_host(p);
    TheoremReport row;
    row.theorem = flavor.theorem;
    row.kind = "construction";
    row.n = n;
    row.k = k;
    row.r = top_r;
    row.d = options.d;
    row.add_detail("host", p.name());

    const int measured = flavor.measure(host);
    const bool in_class = flavor.in_class(measured);
    row.add_detail(flavor.theorem == "4" ? "max_linear_forest" : "matching_number", std::to_string(measured));
    row.add_detail("in_class", yes_no(in_class));

    bool above = flavor.max_r >= 2;
    std::string margins;
    bool above_d0 = flavor.max_r >= 2;
    for (int r = 2; r <= flavor.max_r; ++r) {
      const WideCount count = count_cliques(host, r);
      const WideCount threshold = flavor.threshold(n, k, r, options.d);
      const WideCount threshold_d0 = flavor.threshold(n, k, r, 0);
      above = above && count > threshold;
      above_d0 = above_d0 && count > threshold_d0;
      if (!margins.empty()) margins += ' ';
      margins += "r" + std::to_string(r) + ":" + count.to_string() + (count > threshold ? ">" : "<=") + threshold.to_string();
      if (r == top_r) {
        row.oracle_value = count;
        row.formula_value = threshold;
      }
    }
    if (flavor.max_r < 2) {
      row.oracle_value = count_cliques(host, 2);
      row.formula_value = flavor.threshold(n, k, 2, options.d);
      margins = "no r in range";
    }
    row.add_detail("counts_vs_threshold", margins);
    row.add_detail("above_threshold", yes_no(above));
    row.add_detail("above_threshold_d0", yes_no(above_d0));

    bool host_certified = false;
    if (in_class) {
      const StabilityReport rep = flavor.classify(host, top_r, std::min(options.d, host.min_degree()), true);
      host_certified = certified_validly(host, rep);
      if (const HostAttempt* hit = rep.certified()) {
        row.add_detail("certificate", hit->host.name() + " " + describe(*hit->certificate));
      }
    }
    row.add_detail("host_certified", yes_no(host_certified));

    std::seed_seq seed{options.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k),
                       static_cast<std::uint64_t>(index)};
    std::mt19937_64 rng(seed);
    int samples_ok = 0;
    for (int s = 0; s < options.samples && in_class; ++s) {
      const Graph sub = random_proper_subgraph(host, rng);
      const int d = std::min(options.d, sub.order() == 0 ? 0 : sub.min_degree());
      // Subgraphs of a host in the class stay in the class.
      if (certified_validly(sub, flavor.classify(sub, top_r, d, true))) {
        ++samples_ok;
      } else {
        row.witnesses.push_back(to_graph6(sub));
      }
    }
    row.add_detail("samples_certified", std::to_string(samples_ok) + "/" + std::to_string(options.samples));

    int lost = 0;
    int certified = 0;
    int below = 0;
    int unexplained = 0;
    const auto perturbations = non_edge_representatives(host);
    for (const Edge& e : perturbations) {
      const Graph g = host.with_edge(e.u, e.v);
      if (!flavor.in_class(flavor.measure(g))) {
        ++lost;
        continue;
      }
      const StabilityReport rep = flavor.classify(g, top_r, std::min(options.d, g.min_degree()), true);
      if (certified_validly(g, rep)) {
        ++certified;
      } else if (!rep.above_threshold) {
        ++below;
      } else {
        ++unexplained;
        row.witnesses.push_back(to_graph6(g));
      }
    }
    row.add_detail("perturbations", std::to_string(perturbations.size()));
    row.add_detail("perturbations_left_class", std::to_string(lost));
    row.add_detail("perturbations_certified", std::to_string(certified));
    row.add_detail("perturbations_below_threshold", std::to_string(below));
    row.add_detail("perturbations_unexplained", std::to_string(unexplained));

    row.pass = in_class && above && host_certified && samples_ok == options.samples && unexplained == 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

TheoremReport scan(int n, int k, int r, int d, const Flavor& flavor, bool binding, const CensusOptions& options,
                   const std::function<int(const SubgraphTable&, std::uint64_t)>& parameter) {
  const WideCount threshold = flavor.threshold(n, k, r, d);
  const auto hosts = flavor.hosts(n, k);
  const SubgraphTable table = SubgraphTable::build(n);

  TheoremReport row;
  row.theorem = flavor.theorem;
  row.kind = "scan";
  row.n = n;
  row.k = k;
  row.r = r;
  row.d = d;
  row.formula_value = threshold;

  std::uint64_t in_class = 0;
  std::uint64_t candidates = 0;
  std::uint64_t certified = 0;
  std::uint64_t unexplained = 0;
  WideCount best = 0;
  const std::uint64_t total = table.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (options.progress && (mask & 0xFFFFF) == 0) options.progress(mask, total);
    if (!flavor.in_class(parameter(table, mask))) continue;
    const Graph g = graph_from_mask(n, mask);
    if (n > 0 && g.min_degree() < d) continue;
    ++in_class;
    const WideCount count = count_cliques(g, r);
    best = std::max(best, count);
    if (!(count > threshold)) continue;
    ++candidates;
    bool ok = false;
    for (const ConstructionParams& p : hosts) {
      const auto cert = embeds_in_host(g, p);
      if (cert && certificate_valid(g, *cert)) {
        ok = true;
        break;
      }
    }
    if (ok) {
      ++certified;
    } else {
      ++unexplained;
      if (row.witnesses.size() < options.witness_cap) row.witnesses.push_back(to_graph6(g));
    }
  }
  row.oracle_value = best;
  row.add_detail("graphs_in_class", std::to_string(in_class));
  row.add_detail("above_threshold", std::to_string(candidates));
  row.add_detail("certified", std::to_string(certified));
  row.add_detail("unexplained", std::to_string(unexplained));
  row.add_detail("binding", yes_no(binding));
  row.pass = !binding || unexplained == 0;
  return row;
}

}  // namespace

std::vector<TheoremReport> stability_construction_suite(int n, int k, const SuiteOptions& options) {
  return construction_suite(n, k, forest_flavor(k, options.budget), options);
}

std::vector<TheoremReport> matching_construction_suite(int n, int k, const SuiteOptions& options) {
  return construction_suite(n, k, matching_flavor(k, options.budget), options);
}

TheoremReport stability_scan(int n, int k, int r, int d, const CensusOptions& options) {
  return scan(n, k, r, d, forest_flavor(k, options.budget), r <= (k - 3) / 2, options,
              [](const SubgraphTable& t, std::uint64_t mask) { return t.forest(mask); });
}

TheoremReport matching_stability_scan(int n, int k, int r, int d, const CensusOptions& options) {
  return scan(n, k, r, d, matching_flavor(k, options.budget), r <= k - 1, options,
              [](const SubgraphTable& t, std::uint64_t mask) { return t.matching(mask); });
}

}  // namespace linfor
