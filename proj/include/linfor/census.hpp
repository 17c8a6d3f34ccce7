#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "linfor/forests.hpp"
#include "linfor/graph.hpp"
#include "linfor/wide_count.hpp"

namespace linfor {

struct CensusOptions {
  /// Worker threads for the exhaustive pass; results do not depend on it.
  int threads = 1;
  /// Witnesses kept per extremum (smallest keys first).
  std::size_t witness_cap = 16;
  /// Keep one witness per isomorphism class (the one with the smallest key).
  bool dedup = false;
  /// Search budget for graphs read from input (exhaustive censuses use the mask tables).
  std::uint64_t budget = kDefaultSearchBudget;
  /// Called with (done, total) as the exhaustive pass advances; may be empty.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct Witness {
  /// Edge mask for exhaustive censuses, input position for censuses over a list.
  std::uint64_t key = 0;
  Graph graph;
};

/// Maximum of N_r over one slice of a census, with the graphs attaining it.
struct Extremum {
  bool any = false;
  std::uint64_t value = 0;
  std::vector<Witness> witnesses;
};

/// Maximum N_r bucketed by (maximum linear forest, minimum degree) and by
/// (matching number, minimum degree), so all extremal questions over one order
/// are answered from a single pass.
class GraphCensus {
 public:
  GraphCensus() = default;

  /// Every labeled graph on n <= 8 vertices. The pass is split into fixed
  /// chunks that are merged in order, so the result is identical for any
  /// thread count.
  static GraphCensus exhaustive(int n, const CensusOptions& options = {});
  /// The given graphs, all of which must have order n.
  static GraphCensus from_graphs(int n, std::span<const Graph> graphs, const CensusOptions& options = {});

  int order() const { return n_; }
  std::uint64_t graph_count() const { return graphs_; }
  bool exhaustive() const { return exhaustive_; }

  /// max N_r over graphs with lf <= max_forest and delta >= min_degree.
  Extremum max_cliques_forest(int r, int max_forest, int min_degree) const;
  /// max N_r over graphs with nu <= max_matching and delta >= min_degree.
  Extremum max_cliques_matching(int r, int max_matching, int min_degree) const;

  /// Keys attaining the maximum, ascending; forms[i] is the canonical form of
  /// keys[i] when deduplicating.
  struct Slot {
    bool any = false;
    std::uint64_t value = 0;
    std::vector<std::uint64_t> keys;
    std::vector<std::vector<std::uint64_t>> forms;
  };

 private:
  friend struct CensusBuilder;

  GraphCensus(int n, const CensusOptions& options);
  Graph witness_graph(std::uint64_t key) const;

  Slot& slot(int family, int parameter, int degree, int r);
  const Slot& slot(int family, int parameter, int degree, int r) const;
  Extremum query(int family, int r, int max_parameter, int min_degree) const;

  int n_ = 0;
  bool exhaustive_ = false;
  std::uint64_t graphs_ = 0;
  std::size_t cap_ = 16;
  bool dedup_ = false;
  // [family][parameter 0..n][min degree 0..n][r 0..n], flattened.
  std::vector<Slot> slots_;
  // Inputs of a census over a list; witnesses refer to them by position.
  std::vector<Graph> inputs_;
};

}  // namespace linfor
