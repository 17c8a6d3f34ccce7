#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "linfor/census.hpp"
#include "linfor/cliques.hpp"
#include "linfor/constructions.hpp"
#include "linfor/enumerate.hpp"
#include "linfor/forests.hpp"
#include "linfor/graph6.hpp"
#include "linfor/report.hpp"
#include "linfor/stability.hpp"
#include "linfor/transforms.hpp"
#include "linfor/verify.hpp"

namespace linfor::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inclusive integer range written "N" or "LO:HI".
struct Range {
  int lo = 0;
  int hi = -1;

  std::string text() const { return lo == hi ? std::to_string(lo) : std::to_string(lo) + ":" + std::to_string(hi); }
};

int parse_int(std::string_view text, const std::string& what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw UsageError("invalid " + what + ": '" + std::string(text) + "'");
  }
  return value;
}

std::optional<Range> parse_range(const std::string& text, const std::string& what) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':');
  Range r;
  if (colon == std::string::npos) {
    r.lo = r.hi = parse_int(text, what);
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, colon), what);
    r.hi = parse_int(std::string_view(text).substr(colon + 1), what);
  }
  if (r.lo > r.hi) throw UsageError("empty " + what + " range '" + text + "'");
  return r;
}

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("LINFOR_THREADS")) {
    const int value = parse_int(env, "LINFOR_THREADS");
    if (value < 1) throw UsageError("LINFOR_THREADS must be positive");
    return value;
  }
  return 1;
}

std::vector<Graph> load_graphs(const std::string& path, std::istream& in) {
  if (path.empty()) throw UsageError("--in is required");
  return path == "-" ? read_graph6(in) : read_graph6_file(path);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

struct Common {
  std::string in;
  std::string out;
  std::string format;
};

// ---------------------------------------------------------------- verify

struct VerifyConfig {
  std::string theorem;
  std::string mode = "construction";
  std::optional<Range> n, k, r, d;
  std::string in;
  std::string out;
  std::string format = "json";
  int threads = 0;
  std::uint64_t budget = kDefaultSearchBudget;
  bool dedup = false;
  int samples = 100;
  std::uint64_t seed = 20240601;
};

class ProgressPrinter {
 public:
  ProgressPrinter(std::ostream& err, std::string label) : err_(err), label_(std::move(label)) {}
  void operator()(std::uint64_t done, std::uint64_t total) {
    const int pct = total == 0 ? 100 : static_cast<int>(done * 100 / total);
    if (pct / 10 > last_ / 10 || (pct == 100 && last_ != 100)) {
      err_ << label_ << ": " << pct << "%\n";
      last_ = pct;
    }
  }

 private:
  std::ostream& err_;
  std::string label_;
  int last_ = -1;
};

std::function<void(std::uint64_t, std::uint64_t)> progress_for(std::ostream& err, const std::string& label) {
  auto printer = std::make_shared<ProgressPrinter>(err, label);
  return [printer](std::uint64_t done, std::uint64_t total) { (*printer)(done, total); };
}

Range or_default(const std::optional<Range>& given, int lo, int hi) { return given ? *given : Range{lo, hi}; }

std::string describe(const VerifyConfig& c, const Range& n, const std::optional<Range>& k, const std::optional<Range>& r,
                     const std::optional<Range>& d) {
  std::ostringstream s;
  s << "verify theorem=" << c.theorem;
  if (!c.in.empty()) {
    s << " in=" << c.in;
  } else {
    s << " n=" << n.text();
  }
  if (k) s << " k=" << k->text();
  if (r) s << " r=" << r->text();
  if (d) s << " d=" << d->text();
  if (c.theorem == "4" || c.theorem == "7") {
    s << " mode=" << c.mode;
    if (c.mode == "construction") s << " samples=" << c.samples << " seed=" << c.seed;
  }
  if (c.dedup) s << " dedup";
  return s.str();
}

// Censuses for the equality/bound theorems: exhaustive per order, or grouped input graphs.
std::map<int, GraphCensus> build_censuses(const VerifyConfig& c, const Range& n, std::istream& in, std::ostream& err) {
  std::map<int, GraphCensus> out;
  CensusOptions options;
  options.threads = resolve_threads(c.threads);
  options.dedup = c.dedup;
  options.budget = c.budget;
  if (!c.in.empty()) {
    std::map<int, std::vector<Graph>> by_order;
    for (Graph& g : load_graphs(c.in, in)) by_order[g.order()].push_back(std::move(g));
    for (auto& [order, graphs] : by_order) {
      options.progress = progress_for(err, "input graphs n=" + std::to_string(order));
      out.emplace(order, GraphCensus::from_graphs(order, graphs, options));
    }
    return out;
  }
  if (n.lo < 0 || n.hi > kEnumerationCeiling) {
    throw UsageError("exhaustive verification needs 0 <= n <= " + std::to_string(kEnumerationCeiling) + " (got n=" +
                     n.text() + ")");
  }
  for (int order = n.lo; order <= n.hi; ++order) {
    options.progress = progress_for(err, "census n=" + std::to_string(order));
    out.emplace(order, GraphCensus::exhaustive(order, options));
  }
  return out;
}

// Tuples the checker rejects as outside its statement are counted, not reported.
template <typename Make>
void add_row(ReportDocument& doc, std::size_t& skipped, Make make) {
  try {
    doc.rows.push_back(make());
  } catch (const std::invalid_argument&) {
    ++skipped;
  }
}

ReportDocument verify_forest(const VerifyConfig& c, std::istream& in, std::ostream& err, std::size_t& skipped) {
  const Range n = or_default(c.n, 3, 6);
  const bool with_d = c.theorem == "3";
  if (c.theorem == "1" && c.r && (c.r->lo != 2 || c.r->hi != 2)) throw UsageError("theorem 1 is the case r = 2");
  const Range r = c.theorem == "1" ? Range{2, 2} : or_default(c.r, c.theorem == "2" ? 3 : 2, 4);
  if (!with_d && c.d) throw UsageError("--d applies to theorem 3 only");
  ReportDocument doc;
  doc.command = describe(c, n, c.k, r, c.d);
  for (auto& [order, census] : build_censuses(c, n, in, err)) {
    const Range k = or_default(c.k, 1, order - 1);
    for (int kk = k.lo; kk <= k.hi; ++kk) {
      for (int rr = r.lo; rr <= r.hi; ++rr) {
        if (kk < 1 || kk > order - 1 || rr < 2 || rr > order) {
          ++skipped;
          continue;
        }
        if (!with_d) {
          add_row(doc, skipped, [&] { return brute_ex(census, rr, kk, std::nullopt, c.budget); });
          continue;
        }
        const Range d = or_default(c.d, 0, (kk - 1) / 2);
        for (int dd = d.lo; dd <= d.hi; ++dd) {
          if (dd < 0 || dd > (kk - 1) / 2) {
            ++skipped;
            continue;
          }
          add_row(doc, skipped, [&] { return brute_ex(census, rr, kk, dd, c.budget); });
        }
      }
    }
  }
  return doc;
}

ReportDocument verify_matching(const VerifyConfig& c, std::istream& in, std::ostream& err, std::size_t& skipped) {
  const Range n = or_default(c.n, 3, 6);
  const bool equality = c.theorem == "5";
  if (equality && c.r && (c.r->lo != 2 || c.r->hi != 2)) throw UsageError("theorem 5 is the case r = 2");
  if (equality && c.d) throw UsageError("--d applies to theorem 6 only");
  const Range r = equality ? Range{2, 2} : or_default(c.r, 2, 4);
  ReportDocument doc;
  doc.command = describe(c, n, c.k, r, c.d);
  for (auto& [order, census] : build_censuses(c, n, in, err)) {
    const Range k = or_default(c.k, 1, equality ? (order - 1) / 2 : (order - 2) / 2);
    for (int kk = k.lo; kk <= k.hi; ++kk) {
      for (int rr = r.lo; rr <= r.hi; ++rr) {
        if (kk < 0 || rr < 2 || rr > order) {
          ++skipped;
          continue;
        }
        if (equality) {
          if (order < 2 * kk + 1) {
            ++skipped;
            continue;
          }
          add_row(doc, skipped, [&] { return brute_ex_matching(census, rr, kk); });
          continue;
        }
        if (order < 2 * kk + 2) {
          ++skipped;
          continue;
        }
        const Range d = or_default(c.d, 0, kk);
        for (int dd = d.lo; dd <= d.hi; ++dd) {
          if (dd < 0 || dd > kk) {
            ++skipped;
            continue;
          }
          add_row(doc, skipped, [&] { return brute_ex_matching(census, rr, kk, dd); });
        }
      }
    }
  }
  return doc;
}

// Classifies input graphs against the stability statements, one row per graph and tuple.
void classify_inputs(const VerifyConfig& c, const Range& k, const Range& r, const Range& d, std::istream& in,
                     ReportDocument& doc, std::size_t& skipped) {
  const bool forest = c.theorem == "4";
  const auto graphs = load_graphs(c.in, in);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    for (int kk = k.lo; kk <= k.hi; ++kk) {
      for (int rr = r.lo; rr <= r.hi; ++rr) {
        for (int dd = d.lo; dd <= d.hi; ++dd) {
          TheoremReport row;
          row.theorem = c.theorem;
          row.kind = "classify";
          row.n = g.order();
          row.k = kk;
          row.r = rr;
          row.d = dd;
          row.witnesses.push_back(to_graph6(g));
          row.add_detail("input", std::to_string(i));
          const bool in_class = (forest ? is_lk_free(g, kk, c.budget) : matching_number(g).size <= kk) &&
                                (g.order() == 0 || g.min_degree() >= dd);
          StabilityReport rep;
          try {
            if (!in_class) {
              row.add_detail("in_class", "no");
              row.pass = true;
              doc.rows.push_back(std::move(row));
              continue;
            }
            StabilityOptions options{c.budget, false, true};
            rep = forest ? classify_stability(g, kk, rr, dd, options) : classify_matching_stability(g, kk, rr, dd, options);
          } catch (const std::invalid_argument&) {
            ++skipped;
            continue;
          }
          row.formula_value = rep.threshold;
          row.oracle_value = rep.clique_count;
          row.add_detail("in_class", "yes");
          row.add_detail("above_threshold", rep.above_threshold ? "yes" : "no");
          row.add_detail("threshold_from_min_degree", rep.threshold_from_min_degree ? "yes" : "no");
          row.add_detail("order_hypothesis", rep.order_hypothesis ? "yes" : "no");
          row.add_detail("r_hypothesis", rep.r_hypothesis ? "yes" : "no");
          std::string embeds;
          for (const HostAttempt& a : rep.attempts) {
            if (!a.certificate) continue;
            if (!embeds.empty()) embeds += ' ';
            embeds += a.host.name();
          }
          row.add_detail("embeds_in", embeds.empty() ? "none" : embeds);
          if (const HostAttempt* hit = rep.certified()) row.add_detail("certificate", describe(*hit->certificate));
          row.pass = rep.explained();
          doc.rows.push_back(std::move(row));
        }
      }
    }
  }
}

ReportDocument verify_stability(const VerifyConfig& c, std::istream& in, std::ostream& err, std::size_t& skipped) {
  const bool forest = c.theorem == "4";
  ReportDocument doc;
  if (!c.in.empty()) {
    if (!c.k || !c.r) throw UsageError("classifying input graphs needs --k and --r");
    const Range d = or_default(c.d, 0, 0);
    doc.command = describe(c, Range{}, c.k, c.r, d);
    classify_inputs(c, *c.k, *c.r, d, in, doc, skipped);
    return doc;
  }
  if (c.mode == "construction") {
    const Range n = or_default(c.n, 20, 40);
    const Range k = or_default(c.k, forest ? 7 : 3, forest ? 9 : 4);
    if (c.r) throw UsageError("construction mode checks every r in the hypothesis range; --r is not used");
    const Range d = or_default(c.d, 1, 1);
    if (d.lo != d.hi) throw UsageError("construction mode takes a single --d");
    if (n.hi > kMaxVertices) throw UsageError("hosts are materialized only up to n = 64");
    doc.command = describe(c, n, k, std::nullopt, d);
    SuiteOptions options;
    options.d = d.lo;
    options.samples = c.samples;
    options.seed = c.seed;
    options.budget = c.budget;
    for (int kk = k.lo; kk <= k.hi; ++kk) {
      for (int nn = n.lo; nn <= n.hi; ++nn) {
        err << "theorem " << c.theorem << " hosts n=" << nn << " k=" << kk << "\n";
        try {
          auto rows = forest ? stability_construction_suite(nn, kk, options) : matching_construction_suite(nn, kk, options);
          for (auto& row : rows) doc.rows.push_back(std::move(row));
        } catch (const std::invalid_argument&) {
          ++skipped;
        }
      }
    }
    return doc;
  }
  if (c.mode != "scan") throw UsageError("--mode must be construction or scan");
  const Range n = or_default(c.n, 6, 7);
  const Range k = or_default(c.k, forest ? 5 : 2, forest ? 7 : 3);
  const Range r = or_default(c.r, 2, 2);
  const Range d = or_default(c.d, 0, 0);
  if (n.lo < 0 || n.hi > kEnumerationCeiling) {
    throw UsageError("scan mode needs 0 <= n <= " + std::to_string(kEnumerationCeiling));
  }
  doc.command = describe(c, n, k, r, d);
  CensusOptions options;
  options.threads = resolve_threads(c.threads);
  options.budget = c.budget;
  for (int nn = n.lo; nn <= n.hi; ++nn) {
    for (int kk = k.lo; kk <= k.hi; ++kk) {
      for (int rr = r.lo; rr <= r.hi; ++rr) {
        for (int dd = d.lo; dd <= d.hi; ++dd) {
          if (rr < 1 || rr > nn) {
            ++skipped;
            continue;
          }
          options.progress = progress_for(err, "scan n=" + std::to_string(nn) + " k=" + std::to_string(kk));
          try {
            doc.rows.push_back(forest ? stability_scan(nn, kk, rr, dd, options)
                                      : matching_stability_scan(nn, kk, rr, dd, options));
          } catch (const std::invalid_argument&) {
            ++skipped;
          }
        }
      }
    }
  }
  return doc;
}

int cmd_verify(const VerifyConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  if (c.budget == 0) throw UsageError("--budget must be positive");
  if (c.format != "json" && c.format != "csv") throw UsageError("verify writes --format json or csv");
  if (c.samples < 0) throw UsageError("--samples must be nonnegative");
  std::size_t skipped = 0;
  ReportDocument doc;
  if (c.theorem == "1" || c.theorem == "2" || c.theorem == "3") {
    doc = verify_forest(c, in, err, skipped);
  } else if (c.theorem == "5" || c.theorem == "6") {
    doc = verify_matching(c, in, err, skipped);
  } else if (c.theorem == "4" || c.theorem == "7") {
    doc = verify_stability(c, in, err, skipped);
  } else {
    throw UsageError("--theorem must be one of 1..7");
  }
  if (skipped > 0) err << "skipped " << skipped << " tuple(s) outside the statement's parameter range\n";
  if (doc.rows.empty()) throw UsageError("no parameter tuple in range");
  emit(c.format == "json" ? to_json(doc) : to_csv(doc), c.out, out);
  std::size_t failed = 0;
  for (const auto& row : doc.rows) failed += row.pass ? 0 : 1;
  err << doc.rows.size() << " row(s), " << failed << " failed\n";
  return doc.all_pass() ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- other commands

void require_g6(const std::string& format) {
  if (!format.empty() && format != "g6") throw UsageError("this command writes --format g6 only");
}

std::string edge_list(const std::vector<Edge>& edges) {
  std::string s;
  for (const Edge& e : edges) {
    if (!s.empty()) s += ',';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"linfor: cliques in graphs without large linear forests"};
  app.name("linfor");
  app.require_subcommand(1);

  std::int64_t n = 0, k = 0, a = 0;
  int r = 0, threads = 0, closure = -1, core_alpha = -1, delta = 0;
  std::string variant = "plain";
  Common common;
  VerifyConfig vc;
  std::string n_range, k_range, r_range, d_range;

  auto* construct = app.add_subcommand("construct", "Write the host H(n,k,a) or a variant as graph6");
  construct->add_option("--n", n, "Order")->required();
  construct->add_option("--k", k, "Clique-side parameter k (|A| + |B| = k - a)")->required();
  construct->add_option("--a", a, "|A|")->required();
  construct->add_option("--variant", variant, "plain, plus or plusplus");
  construct->add_option("--out", common.out, "Output file (default stdout)");
  construct->add_option("--format", common.format, "g6");

  auto* count = app.add_subcommand("count", "Print N_r for each graph6 record");
  count->add_option("--in", common.in, "graph6 file, or - for stdin")->required();
  count->add_option("--r", r, "Clique size")->required();
  count->add_option("--out", common.out, "Output file (default stdout)");

  auto* transform = app.add_subcommand("transform", "k-closure or alpha-core of each graph6 record");
  transform->add_option("--in", common.in, "graph6 file, or - for stdin")->required();
  auto* closure_opt = transform->add_option("--closure", closure, "Join non-adjacent pairs with degree sum >= K");
  auto* core_opt = transform->add_option("--core", core_alpha, "Delete vertices of degree <= ALPHA while possible");
  closure_opt->excludes(core_opt);
  transform->add_option("--out", common.out, "Output file (default stdout)");
  transform->add_option("--format", common.format, "g6");

  auto* forest = app.add_subcommand("forest", "Maximum linear forest of each graph6 record");
  forest->add_option("--in", common.in, "graph6 file, or - for stdin")->required();
  forest->add_option("--budget", vc.budget, "Search node budget");
  forest->add_option("--out", common.out, "Output file (default stdout)");

  auto* matching = app.add_subcommand("matching", "Matching number of each graph6 record");
  matching->add_option("--in", common.in, "graph6 file, or - for stdin")->required();
  matching->add_option("--out", common.out, "Output file (default stdout)");

  auto* gext = app.add_subcommand("gext", "Most edges with linear forest <= k and maximum degree <= delta");
  gext->add_option("--k", k, "Linear forest bound (0..6)")->required();
  gext->add_option("--delta", delta, "Maximum degree (0..4)")->required();

  auto* verify = app.add_subcommand("verify", "Check a theorem against the exhaustive oracle or the host suite");
  verify->add_option("--theorem", vc.theorem, "1..7")->required();
  verify->add_option("--n", n_range, "Order N or LO:HI");
  verify->add_option("--k", k_range, "k as N or LO:HI");
  verify->add_option("--r", r_range, "Clique size as N or LO:HI");
  verify->add_option("--d", d_range, "Minimum degree as N or LO:HI");
  verify->add_option("--mode", vc.mode, "Theorems 4/7: construction (default) or scan");
  verify->add_option("--samples", vc.samples, "Theorems 4/7: random proper subgraphs per host");
  verify->add_option("--seed", vc.seed, "Theorems 4/7: sampling seed");
  verify->add_option("--in", vc.in, "graph6 file (or -) replacing exhaustive enumeration");
  verify->add_option("--out", vc.out, "Report file (default stdout)");
  verify->add_option("--format", vc.format, "json (default) or csv");
  verify->add_option("--threads", threads, "Worker threads (default LINFOR_THREADS or 1)");
  verify->add_option("--budget", vc.budget, "Search node budget");
  verify->add_flag("--dedup", vc.dedup, "One witness per isomorphism class");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*construct) {
      require_g6(common.format);
      const auto v = parse_variant(variant);
      if (!v) throw UsageError("--variant must be plain, plus or plusplus");
      const ConstructionParams p{n, k, a, *v};
      try {
        p.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      emit(to_graph6(build_host(p)) + "\n", common.out, out);
      return kExitPass;
    }
    if (*count) {
      if (r < 1) throw UsageError("--r must be at least 1");
      std::string text;
      for (const Graph& g : load_graphs(common.in, in)) text += count_cliques(g, r).to_string() + "\n";
      emit(text, common.out, out);
      return kExitPass;
    }
    if (*transform) {
      require_g6(common.format);
      if (closure < 0 && core_alpha < 0) throw UsageError("transform needs --closure K or --core ALPHA");
      std::string text;
      for (const Graph& g : load_graphs(common.in, in)) {
        text += to_graph6(closure >= 0 ? k_closure(g, closure) : core(g, core_alpha).core) + "\n";
      }
      emit(text, common.out, out);
      return kExitPass;
    }
    if (*forest) {
      std::string text;
      for (const Graph& g : load_graphs(common.in, in)) {
        const ForestResult f = max_linear_forest(g, vc.budget);
        text += std::to_string(f.size) + " " + edge_list(f.witness) + "\n";
      }
      emit(text, common.out, out);
      return kExitPass;
    }
    if (*matching) {
      std::string text;
      for (const Graph& g : load_graphs(common.in, in)) {
        const MatchingResult m = matching_number(g);
        text += std::to_string(m.size) + " " + edge_list(m.witness) + "\n";
      }
      emit(text, common.out, out);
      return kExitPass;
    }
    if (*gext) {
      GExtremalResult result;
      try {
        result = g_extremal(static_cast<int>(k), delta);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      out << result.edges << " " << to_graph6(result.witness) << "\n";
      return kExitPass;
    }
    if (*verify) {
      vc.threads = threads;
      vc.n = parse_range(n_range, "--n");
      vc.k = parse_range(k_range, "--k");
      vc.r = parse_range(r_range, "--r");
      vc.d = parse_range(d_range, "--d");
      return cmd_verify(vc, in, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Graph6Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SearchBudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget)\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace linfor::cli
