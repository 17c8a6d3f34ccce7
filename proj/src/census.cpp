#include "linfor/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "linfor/canonical.hpp"
#include "linfor/cliques.hpp"
#include "linfor/enumerate.hpp"

namespace linfor {

namespace {

constexpr int kForestFamily = 0;
constexpr int kMatchingFamily = 1;

// Chunks are fixed by the input size alone, never by the thread count.
constexpr std::uint64_t kChunks = 256;

std::vector<std::uint64_t> form_key(const Graph& g) {
  const Graph form = canonical_form(g);
  return {form.rows().begin(), form.rows().end()};
}

}  // namespace

// Accumulates one chunk of graphs into a private slot table.
struct CensusBuilder {
  GraphCensus& census;

  // Keys arrive ascending, so once a tie list is full later ties are skipped.
  template <class GraphFn>
  void offer(GraphCensus::Slot& s, std::uint64_t value, std::uint64_t key, GraphFn&& graph) {
    if (s.any && value < s.value) return;
    if (!s.any || value > s.value) {
      s.any = true;
      s.value = value;
      s.keys.clear();
      s.forms.clear();
    } else if (s.keys.size() >= census.cap_) {
      return;
    }
    if (census.dedup_) {
      auto form = form_key(graph());
      if (std::find(s.forms.begin(), s.forms.end(), form) != s.forms.end()) return;
      s.forms.push_back(std::move(form));
    }
    s.keys.push_back(key);
  }

  template <class GraphFn>
  void record(int forest, int matching, int min_degree, std::span<const std::uint64_t> counts, std::uint64_t key,
              GraphFn&& graph) {
    for (int r = 1; r <= census.n_; ++r) {
      const std::uint64_t value = counts[static_cast<std::size_t>(r)];
      offer(census.slot(kForestFamily, forest, min_degree, r), value, key, graph);
      offer(census.slot(kMatchingFamily, matching, min_degree, r), value, key, graph);
    }
  }

  // Folds `later` (all keys above those of `earlier`) into `earlier`.
  static void merge(GraphCensus::Slot& earlier, const GraphCensus::Slot& later, std::size_t cap, bool dedup) {
    if (!later.any) return;
    if (!earlier.any || later.value > earlier.value) {
      earlier = later;
      return;
    }
    if (later.value < earlier.value) return;
    for (std::size_t i = 0; i < later.keys.size() && earlier.keys.size() < cap; ++i) {
      if (dedup) {
        if (std::find(earlier.forms.begin(), earlier.forms.end(), later.forms[i]) != earlier.forms.end()) continue;
        earlier.forms.push_back(later.forms[i]);
      }
      earlier.keys.push_back(later.keys[i]);
    }
  }
};

GraphCensus::GraphCensus(int n, const CensusOptions& options)
    : n_(n), cap_(options.witness_cap), dedup_(options.dedup) {
  const auto side = static_cast<std::size_t>(n + 1);
  slots_.resize(2 * side * side * side);
}

GraphCensus::Slot& GraphCensus::slot(int family, int parameter, int degree, int r) {
  const auto side = static_cast<std::size_t>(n_ + 1);
  return slots_[((static_cast<std::size_t>(family) * side + static_cast<std::size_t>(parameter)) * side +
                 static_cast<std::size_t>(degree)) *
                    side +
                static_cast<std::size_t>(r)];
}

const GraphCensus::Slot& GraphCensus::slot(int family, int parameter, int degree, int r) const {
  return const_cast<GraphCensus*>(this)->slot(family, parameter, degree, r);
}

Graph GraphCensus::witness_graph(std::uint64_t key) const {
  return exhaustive_ ? graph_from_mask(n_, key) : inputs_[static_cast<std::size_t>(key)];
}

GraphCensus GraphCensus::exhaustive(int n, const CensusOptions& options) {
  const SubgraphTable table = SubgraphTable::build(n);
  const std::uint64_t total = table.size();
  const std::uint64_t chunks = std::min(kChunks, total);
  const std::uint64_t per_chunk = (total + chunks - 1) / chunks;

  std::vector<Edge> slot_edge;
  for (int s = 0; s < edge_slots(n); ++s) slot_edge.push_back(edge_of_slot(s));

  std::vector<GraphCensus> partial(static_cast<std::size_t>(chunks), GraphCensus(n, options));
  std::atomic<std::uint64_t> next{0};
  std::mutex progress_lock;
  std::uint64_t done = 0;

  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      GraphCensus& part = partial[static_cast<std::size_t>(c)];
      CensusBuilder builder{part};
      std::array<std::uint64_t, kMaxVertices + 1> counts{};
      std::array<std::uint64_t, kEnumerationCeiling> rows{};
      const std::uint64_t begin = c * per_chunk;
      const std::uint64_t end = std::min(total, begin + per_chunk);
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        rows.fill(0);
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
          const Edge& e = slot_edge[static_cast<std::size_t>(std::countr_zero(rest))];
          rows[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
          rows[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
        }
        int min_degree = n;
        for (int v = 0; v < n; ++v) min_degree = std::min(min_degree, std::popcount(rows[static_cast<std::size_t>(v)]));
        if (n == 0) min_degree = 0;
        detail::count_cliques_by_size(std::span<const std::uint64_t>(rows.data(), static_cast<std::size_t>(n)), n,
                                      counts);
        builder.record(table.forest(mask), table.matching(mask), min_degree, counts, mask,
                       [&] { return graph_from_mask(n, mask); });
      }
      part.graphs_ = end - begin;
      if (options.progress) {
        std::lock_guard<std::mutex> hold(progress_lock);
        done += end - begin;
        options.progress(done, total);
      }
    }
  };

  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(chunks)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  GraphCensus census(n, options);
  census.exhaustive_ = true;
  for (const GraphCensus& part : partial) {
    census.graphs_ += part.graphs_;
    for (std::size_t i = 0; i < census.slots_.size(); ++i) {
      CensusBuilder::merge(census.slots_[i], part.slots_[i], census.cap_, census.dedup_);
    }
  }
  return census;
}

GraphCensus GraphCensus::from_graphs(int n, std::span<const Graph> graphs, const CensusOptions& options) {
  if (n < 0 || n > kMaxVertices) throw std::out_of_range("census order must lie in 0..64");
  GraphCensus census(n, options);
  census.inputs_.assign(graphs.begin(), graphs.end());
  CensusBuilder builder{census};
  std::array<std::uint64_t, kMaxVertices + 1> counts{};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    if (g.order() != n) {
      throw std::invalid_argument("census input " + std::to_string(i) + " has order " + std::to_string(g.order()) +
                                  ", expected " + std::to_string(n));
    }
    counts.fill(0);
    detail::count_cliques_by_size(g.rows(), n, counts);
    const int forest = max_linear_forest(g, options.budget).size;
    const int matching = matching_number(g).size;
    builder.record(forest, matching, n == 0 ? 0 : g.min_degree(), counts, i, [&] { return g; });
    ++census.graphs_;
    if (options.progress) options.progress(i + 1, graphs.size());
  }
  return census;
}

Extremum GraphCensus::query(int family, int r, int max_parameter, int min_degree) const {
  if (r < 1 || r > n_) {
    throw std::out_of_range("census query needs 1 <= r <= n (got r=" + std::to_string(r) + ", n=" +
                            std::to_string(n_) + ")");
  }
  const int top = std::min(max_parameter, n_);
  const int low = std::max(min_degree, 0);
  std::vector<const Slot*> best;
  std::uint64_t value = 0;
  for (int p = 0; p <= top; ++p) {
    for (int d = low; d <= n_; ++d) {
      const Slot& s = slot(family, p, d, r);
      if (!s.any) continue;
      if (best.empty() || s.value > value) {
        best.clear();
        value = s.value;
      }
      if (s.value == value) best.push_back(&s);
    }
  }
  Extremum out;
  if (best.empty()) return out;
  out.any = true;
  out.value = value;
  // Buckets hold disjoint isomorphism classes, so merging by key needs no
  // cross-bucket deduplication.
  std::vector<std::uint64_t> keys;
  for (const Slot* s : best) keys.insert(keys.end(), s->keys.begin(), s->keys.end());
  std::sort(keys.begin(), keys.end());
  if (keys.size() > cap_) keys.resize(cap_);
  for (std::uint64_t key : keys) out.witnesses.push_back({key, witness_graph(key)});
  return out;
}

Extremum GraphCensus::max_cliques_forest(int r, int max_forest, int min_degree) const {
  return query(kForestFamily, r, max_forest, min_degree);
}

Extremum GraphCensus::max_cliques_matching(int r, int max_matching, int min_degree) const {
  return query(kMatchingFamily, r, max_matching, min_degree);
}

}  // namespace linfor
