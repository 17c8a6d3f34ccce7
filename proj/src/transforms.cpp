#include "linfor/transforms.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace linfor {

Graph k_closure(const Graph& g, int k) {
  Graph h = g;
  const int n = h.order();
  std::deque<Edge> work;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) work.push_back({u, v});

  auto qualifies = [&](int u, int v) { return !h.has_edge(u, v) && h.degree(u) + h.degree(v) >= k; };

  while (!work.empty()) {
    const Edge e = work.front();
    work.pop_front();
    if (!qualifies(e.u, e.v)) continue;
    h.add_edge(e.u, e.v);
    for (int x : {e.u, e.v}) {
      for (int w = 0; w < n; ++w) {
        if (w != x && qualifies(x, w)) work.push_back({std::min(x, w), std::max(x, w)});
      }
    }
  }
  return h;
}

CoreResult core(const Graph& g, int alpha) {
  Graph h = g;
  VertexSet alive = g.vertices();
  CoreResult result;
  bool removed = true;
  while (removed) {
    removed = false;
    for (int v : alive) {
      if ((h.neighbors(v) & alive).size() <= alpha) {
        alive.erase(v);
        result.removed_order.push_back(v);
        removed = true;
        break;
      }
    }
  }
  result.kept = alive;
  result.core = induced_subgraph(g, alive);
  return result;
}

PosaWitness find_posa(const Graph& g, int q) {
  PosaWitness w;
  w.q = q;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) <= q) w.vertices.insert(v);
  w.s = w.vertices.size();
  return w;
}

WideCount posa_clique_bound(std::int64_t n, std::int64_t s, std::int64_t q, std::int64_t r) {
  if (s < 0 || q < 0 || r < 1) throw std::invalid_argument("posa_clique_bound: need s, q >= 0 and r >= 1");
  if (n < s + q) throw std::invalid_argument("posa_clique_bound: side condition n >= s + q violated");
  return binomial_signed(n - s, r) + WideCount(static_cast<std::uint64_t>(s)) * binomial_signed(q, r - 1);
}

SplitResult degree_split(const Graph& g, int threshold) {
  SplitResult out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= threshold) {
      out.t_set.insert(v);
    } else {
      out.t_prime.insert(v);
    }
  }
  for (int v : out.t_set) {
    if (!out.t_prime.is_subset_of(g.neighbors(v))) {
      out.complete_between = false;
      break;
    }
  }
  return out;
}

}  // namespace linfor
