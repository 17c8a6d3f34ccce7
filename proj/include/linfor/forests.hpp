#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "linfor/graph.hpp"

namespace linfor {

inline constexpr std::uint64_t kDefaultSearchBudget = 200'000'000;

/// Raised when an exact search exhausts its node budget before deciding.
class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum linear forest: size is the edge count, witness the edges realizing it.
struct ForestResult {
  int size = 0;
  std::vector<Edge> witness;
};

/// Maximum matching: size is nu(G).
struct MatchingResult {
  int size = 0;
  std::vector<Edge> witness;
};

/// Does the edge set form a disjoint union of paths (max degree 2, acyclic)?
bool is_linear_forest(int n, std::span<const Edge> edges);
bool is_linear_forest(const Graph& g);

/// Exact maximum number of edges of a linear-forest subgraph.
///
/// Classes of vertices with identical neighbourhoods N are first truncated to
/// 2|N| members, which cannot change the optimum since each N-vertex carries at
/// most two forest edges. Components are then solved separately: up to 20
/// vertices by a subset DP over path covers, beyond that by iterative edge
/// branch-and-bound that draws on `node_budget`.
///
/// Witness ties are broken deterministically (lowest vertices first).
ForestResult max_linear_forest(const Graph& g, std::uint64_t node_budget = kDefaultSearchBudget);

/// A linear forest with exactly `size` edges, if one exists.
/// Edge branch-and-bound in lexicographic edge order, inclusion branch first.
std::optional<std::vector<Edge>> find_linear_forest(const Graph& g, int size,
                                                    std::uint64_t node_budget = kDefaultSearchBudget);

/// True iff g has no linear forest with k edges, i.e. max_linear_forest(g).size <= k - 1.
/// k = 0 is never free: the empty forest is always present.
bool is_lk_free(const Graph& g, int k, std::uint64_t node_budget = kDefaultSearchBudget);

/// Edmonds' blossom algorithm; the witness is a maximum matching.
MatchingResult matching_number(const Graph& g);

/// Exact g(k, delta): max edges of a graph with maximum linear forest <= k and
/// maximum degree <= delta, with a witness graph.
struct GExtremalResult {
  int edges = 0;
  Graph witness;
  /// Best edge count of a connected component with maximum linear forest exactly l, l = 0..k.
  std::vector<int> component_best;
  /// Largest order of any connected graph in the class; generation stopped one level above.
  int largest_component_order = 0;
  std::size_t components_enumerated = 0;
};

/// Connected graphs in the class are generated level by level (one new vertex
/// at a time, isomorphs rejected by canonical form) until a level comes out
/// empty. The class is closed under deleting a non-cut vertex, so an empty
/// level proves completeness. Components are then combined by an unbounded
/// knapsack over the linear-forest budget k.
///
/// Throws std::invalid_argument outside k <= 6, delta <= 4.
GExtremalResult g_extremal(int k, int max_degree);

}  // namespace linfor
