#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "linfor/canonical.hpp"
#include "linfor/forests.hpp"

namespace linfor {

namespace {

using Key = std::vector<std::uint64_t>;

Key key_of(const Graph& canonical) { return {canonical.rows().begin(), canonical.rows().end()}; }

struct Member {
  Graph graph;
  int forest = 0;
};

// Maximum linear forest of `g`, known to be within [floor, floor + 2], or -1 when it exceeds cap.
int bounded_forest(const Graph& g, int floor, int cap) {
  int value = floor;
  while (value < floor + 2) {
    if (!find_linear_forest(g, value + 1)) return value;
    if (value + 1 > cap) return -1;
    ++value;
  }
  return value;
}

template <class Fn>
void for_each_attachment(const std::vector<int>& open, int max_size, Fn&& fn) {
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!chosen.empty()) fn(chosen);
    if (static_cast<int>(chosen.size()) == max_size) return;
    for (std::size_t i = from; i < open.size(); ++i) {
      chosen.push_back(open[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

GExtremalResult g_extremal(int k, int max_degree) {
  if (k < 0 || k > 6 || max_degree < 0 || max_degree > 4) {
    throw std::invalid_argument("g_extremal: supported range is 0 <= k <= 6, 0 <= delta <= 4 (got k=" +
                                std::to_string(k) + ", delta=" + std::to_string(max_degree) + ")");
  }

  GExtremalResult result;
  result.component_best.assign(static_cast<std::size_t>(k + 1), -1);
  std::vector<Graph> best_witness(static_cast<std::size_t>(k + 1));
  result.component_best[0] = 0;
  best_witness[0] = Graph(1);

  std::map<Key, Member> level;
  level.emplace(key_of(Graph(1)), Member{Graph(1), 0});
  result.largest_component_order = 1;
  result.components_enumerated = 1;

  while (!level.empty()) {
    std::map<Key, Member> next;
    std::set<Key> rejected;
    for (const auto& [key, member] : level) {
      const Graph& g = member.graph;
      const int m = g.order();
      if (m + 1 > kMaxVertices) throw std::logic_error("g_extremal: component order exceeded 64");
      std::vector<int> open;
      for (int v = 0; v < m; ++v)
        if (g.degree(v) < max_degree) open.push_back(v);
      for_each_attachment(open, max_degree, [&](const std::vector<int>& attach) {
        Graph h(m + 1);
        for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
        for (int v : attach) h.add_edge(v, m);
        Key hk = key_of(canonical_form(h));
        if (next.contains(hk) || rejected.contains(hk)) return;
        const int forest = bounded_forest(h, member.forest, k);
        if (forest < 0) {
          rejected.insert(std::move(hk));
          return;
        }
        next.emplace(std::move(hk), Member{h, forest});
      });
    }
    for (const auto& [key, member] : next) {
      const auto slot = static_cast<std::size_t>(member.forest);
      const int e = member.graph.edge_count();
      if (e > result.component_best[slot]) {
        result.component_best[slot] = e;
        best_witness[slot] = member.graph;
      }
      result.largest_component_order = std::max(result.largest_component_order, member.graph.order());
    }
    result.components_enumerated += next.size();
    level = std::move(next);
  }

  // Unbounded knapsack over the forest budget; lf is additive over components.
  std::vector<int> total(static_cast<std::size_t>(k + 1), 0);
  std::vector<int> pick(static_cast<std::size_t>(k + 1), 0);
  for (int b = 1; b <= k; ++b) {
    total[b] = total[b - 1];
    pick[b] = 0;
    for (int l = 1; l <= b; ++l) {
      if (result.component_best[l] < 0) continue;
      const int cand = total[b - l] + result.component_best[l];
      if (cand > total[b]) {
        total[b] = cand;
        pick[b] = l;
      }
    }
  }
  result.edges = total[k];

  Graph witness(0);
  for (int b = k; b > 0;) {
    if (pick[b] == 0) {
      --b;
      continue;
    }
    witness = disjoint_union(witness, best_witness[static_cast<std::size_t>(pick[b])]);
    b -= pick[b];
  }
  result.witness = witness;
  return result;
}

}  // namespace linfor
