#pragma once

#include <cstdint>
#include <vector>

#include "linfor/graph.hpp"
#include "linfor/wide_count.hpp"

namespace linfor {

/// k-closure: joins nonadjacent u, v with d(u) + d(v) >= k until no such pair remains.
/// Pairs are taken from a worklist seeded in (u, v) order and refilled with the
/// pairs at a vertex whose degree just grew.
Graph k_closure(const Graph& g, int k);

/// Result of alpha-disintegration.
struct CoreResult {
  /// The (alpha+1)-core, relabeled 0..|kept|-1 in increasing vertex order; order 0 when empty.
  Graph core;
  VertexSet kept;
  /// Deleted vertices in deletion order (lowest eligible vertex first).
  std::vector<int> removed_order;
};

/// Repeatedly deletes a vertex of degree <= alpha.
CoreResult core(const Graph& g, int alpha);

/// (s, q)-Posa witness: every vertex listed has degree <= q.
struct PosaWitness {
  int s = 0;
  int q = 0;
  VertexSet vertices;
};

/// The maximal witness: all vertices of degree <= q.
PosaWitness find_posa(const Graph& g, int q);

/// C(n - s, r) + s C(q, r - 1), the clique bound for graphs with the (s, q)-Posa
/// property. Throws std::invalid_argument unless n >= s + q (and s, q >= 0, r >= 1).
WideCount posa_clique_bound(std::int64_t n, std::int64_t s, std::int64_t q, std::int64_t r);

struct SplitResult {
  VertexSet t_set;
  VertexSet t_prime;
  /// Every T–T' pair is an edge (vacuous if either side is empty).
  bool complete_between = true;
};

/// T = {v : d(v) >= threshold}, T' = V \ T.
SplitResult degree_split(const Graph& g, int threshold);

}  // namespace linfor
