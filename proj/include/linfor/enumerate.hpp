#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "linfor/graph.hpp"

namespace linfor {

/// Largest order for full labeled enumeration (2^28 graphs at n = 8).
inline constexpr int kEnumerationCeiling = 8;

/// Edge slots follow the graph6 column order: slot j(j-1)/2 + i holds pair (i, j), i < j.
constexpr int edge_slots(int n) { return n * (n - 1) / 2; }
Edge edge_of_slot(int slot);
int slot_of_edge(int u, int v);

Graph graph_from_mask(int n, std::uint64_t mask);
/// Throws std::out_of_range unless g.order() <= 11 (the mask must fit 64 bits).
std::uint64_t mask_of(const Graph& g);

/// Calls fn(mask, graph) for every labeled graph on n vertices in increasing
/// mask order. Throws std::out_of_range when n exceeds the ceiling.
void for_each_graph(int n, const std::function<void(std::uint64_t, const Graph&)>& fn);

/// Every labeled graph on n vertices passing filter, optionally keeping only
/// the first (smallest-mask) member of each isomorphism class.
std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter = {},
                                    bool dedup = false);

/// Maximum linear forest and matching number of every labeled graph on n
/// vertices, filled by recursion over edge masks:
///   lf(G) = |E| if G is a linear forest, else max_e lf(G - e);
///   nu(G) = max(nu(G - e), 1 + nu(G - N[e])) for the top edge e.
/// Independent of the search code in forests.cpp.
class SubgraphTable {
 public:
  static SubgraphTable build(int n);

  int order() const { return n_; }
  std::uint64_t size() const { return static_cast<std::uint64_t>(packed_.size()); }
  int forest(std::uint64_t mask) const { return packed_[mask] & 0x0F; }
  int matching(std::uint64_t mask) const { return packed_[mask] >> 4; }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> packed_;
};

}  // namespace linfor
