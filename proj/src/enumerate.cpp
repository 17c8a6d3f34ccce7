#include "linfor/enumerate.hpp"

#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "linfor/canonical.hpp"

namespace linfor {

namespace {

void check_ceiling(int n) {
  if (n < 0 || n > kEnumerationCeiling) {
    throw std::out_of_range("labeled enumeration supports 0 <= n <= " + std::to_string(kEnumerationCeiling) +
                            " (got n=" + std::to_string(n) + ")");
  }
}

}  // namespace

Edge edge_of_slot(int slot) {
  int v = 1;
  while (v * (v + 1) / 2 <= slot) ++v;
  return {slot - v * (v - 1) / 2, v};
}

int slot_of_edge(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    const Edge e = edge_of_slot(std::countr_zero(rest));
    g.add_edge(e.u, e.v);
  }
  return g;
}

std::uint64_t mask_of(const Graph& g) {
  if (edge_slots(g.order()) > 64) throw std::out_of_range("mask_of: graph has more than 64 vertex pairs");
  std::uint64_t mask = 0;
  for (const Edge& e : g.edges()) mask |= std::uint64_t{1} << slot_of_edge(e.u, e.v);
  return mask;
}

void for_each_graph(int n, const std::function<void(std::uint64_t, const Graph&)>& fn) {
  check_ceiling(n);
  const std::uint64_t total = std::uint64_t{1} << edge_slots(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(mask, graph_from_mask(n, mask));
}

std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter, bool dedup) {
  std::vector<Graph> out;
  std::set<std::vector<std::uint64_t>> seen;
  for_each_graph(n, [&](std::uint64_t, const Graph& g) {
    if (filter && !filter(g)) return;
    if (dedup) {
      const Graph form = canonical_form(g);
      if (!seen.insert({form.rows().begin(), form.rows().end()}).second) return;
    }
    out.push_back(g);
  });
  return out;
}

SubgraphTable SubgraphTable::build(int n) {
  check_ceiling(n);
  const int slots = edge_slots(n);
  const std::uint64_t total = std::uint64_t{1} << slots;

  std::vector<Edge> slot_edge(static_cast<std::size_t>(slots));
  for (int s = 0; s < slots; ++s) slot_edge[static_cast<std::size_t>(s)] = edge_of_slot(s);
  // incident[v]: slots of all pairs containing v.
  std::vector<std::uint64_t> incident(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < slots; ++s) {
    incident[static_cast<std::size_t>(slot_edge[s].u)] |= std::uint64_t{1} << s;
    incident[static_cast<std::size_t>(slot_edge[s].v)] |= std::uint64_t{1} << s;
  }

  SubgraphTable table;
  table.n_ = n;
  table.packed_.assign(total, 0);

  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const int top = 63 - std::countl_zero(mask);
    const std::uint64_t without_top = mask & ~(std::uint64_t{1} << top);
    const Edge te = slot_edge[static_cast<std::size_t>(top)];

    const int nu_skip = table.matching(without_top);
    const std::uint64_t shrunk = mask & ~incident[static_cast<std::size_t>(te.u)] & ~incident[static_cast<std::size_t>(te.v)];
    const int nu = std::max(nu_skip, 1 + table.matching(shrunk));

    // Linear-forest test: degrees <= 2 and no cycle (union-find on n <= 8 vertices).
    bool linear = true;
    for (int v = 0; v < n && linear; ++v) {
      if (std::popcount(mask & incident[static_cast<std::size_t>(v)]) > 2) linear = false;
    }
    if (linear) {
      int parent[kEnumerationCeiling];
      for (int v = 0; v < n; ++v) parent[v] = v;
      auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      for (std::uint64_t rest = mask; rest != 0 && linear; rest &= rest - 1) {
        const Edge e = slot_edge[static_cast<std::size_t>(std::countr_zero(rest))];
        const int a = find(e.u);
        const int b = find(e.v);
        if (a == b) linear = false;
        parent[a] = b;
      }
    }

    int lf = 0;
    if (linear) {
      lf = std::popcount(mask);
    } else {
      // Deleting one edge lowers lf by at most one, so lf(mask - e) + 1 bounds lf(mask).
      const int ceiling = table.forest(without_top) + 1;
      lf = table.forest(without_top);
      for (std::uint64_t rest = without_top; rest != 0 && lf < ceiling; rest &= rest - 1) {
        const std::uint64_t bit = rest & (~rest + 1);
        lf = std::max(lf, table.forest(mask & ~bit));
      }
    }
    table.packed_[mask] = static_cast<std::uint8_t>(lf | (nu << 4));
  }
  return table;
}

}  // namespace linfor
