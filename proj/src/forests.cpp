#include "linfor/forests.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>

namespace linfor {

namespace {

constexpr int kDpLimit = 20;
constexpr std::uint8_t kInf = 0xFF;

// Induced subgraph with its vertex map back to the source graph.
struct Reduced {
  Graph graph;
  std::vector<int> original;
};

// Truncates every class of vertices sharing one neighbourhood N to 2|N|
// members and drops isolated vertices.
Reduced reduce_false_twins(const Graph& g) {
  VertexSet keep;
  VertexSet seen;
  for (int v = 0; v < g.order(); ++v) {
    if (seen.contains(v)) continue;
    const VertexSet nb = g.neighbors(v);
    if (nb.empty()) {
      seen.insert(v);
      continue;
    }
    const int cap = 2 * nb.size();
    int kept = 0;
    for (int w = v; w < g.order(); ++w) {
      if (seen.contains(w) || g.neighbors(w) != nb) continue;
      seen.insert(w);
      if (kept < cap) {
        keep.insert(w);
        ++kept;
      }
    }
  }
  return {induced_subgraph(g, keep), std::vector<int>(keep.begin(), keep.end())};
}

// Greedy path growth, always stepping to the unvisited neighbour with the
// fewest unvisited neighbours. Returns the forest edges.
std::vector<Edge> greedy_paths(const Graph& g, int start) {
  std::vector<Edge> out;
  VertexSet unvisited = g.vertices();
  int cur = start;
  while (true) {
    unvisited.erase(cur);
    int best = -1;
    int best_deg = kMaxVertices + 1;
    for (int w : g.neighbors(cur) & unvisited) {
      const int d = (g.neighbors(w) & unvisited).size();
      if (d < best_deg) {
        best = w;
        best_deg = d;
      }
    }
    if (best >= 0) {
      out.push_back({std::min(cur, best), std::max(cur, best)});
      cur = best;
      continue;
    }
    if (unvisited.empty()) break;
    // Restart at a remaining vertex of minimum remaining degree.
    int next = -1;
    int next_deg = kMaxVertices + 1;
    for (int w : unvisited) {
      const int d = (g.neighbors(w) & unvisited).size();
      if (d < next_deg) {
        next = w;
        next_deg = d;
      }
    }
    cur = next;
  }
  return out;
}

std::vector<Edge> best_greedy(const Graph& g) {
  std::vector<Edge> best;
  for (int s = 0; s < g.order(); ++s) {
    auto cand = greedy_paths(g, s);
    if (cand.size() > best.size()) best = std::move(cand);
    if (static_cast<int>(best.size()) == g.order() - 1) break;
  }
  return best;
}

// Minimum path cover by DP over (covered set, end of the open path).
std::vector<Edge> forest_by_subset_dp(const Graph& g) {
  const int m = g.order();
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) adj[v] = static_cast<std::uint32_t>(g.neighbors(v).bits());

  std::vector<std::uint8_t> dp((static_cast<std::size_t>(full) + 1) * static_cast<std::size_t>(m), kInf);
  auto at = [&](std::uint32_t s, int v) -> std::uint8_t& {
    return dp[static_cast<std::size_t>(s) * static_cast<std::size_t>(m) + static_cast<std::size_t>(v)];
  };
  for (int v = 0; v < m; ++v) at(std::uint32_t{1} << v, v) = 1;

  for (std::uint32_t s = 1; s < full; ++s) {
    std::uint8_t best = kInf;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint8_t c = at(s, v);
      if (c == kInf) continue;
      best = std::min(best, c);
      for (std::uint32_t ext = adj[v] & ~s; ext != 0; ext &= ext - 1) {
        const int u = std::countr_zero(ext);
        std::uint8_t& cell = at(s | (std::uint32_t{1} << u), u);
        cell = std::min(cell, c);
      }
    }
    if (best == kInf) continue;
    for (std::uint32_t ext = full & ~s; ext != 0; ext &= ext - 1) {
      const int u = std::countr_zero(ext);
      std::uint8_t& cell = at(s | (std::uint32_t{1} << u), u);
      cell = std::min(cell, static_cast<std::uint8_t>(best + 1));
    }
  }

  int end = 0;
  for (int v = 1; v < m; ++v)
    if (at(full, v) < at(full, end)) end = v;

  // Walk back: prefer the path-extension predecessor, lowest vertex first.
  std::vector<Edge> out;
  std::uint32_t s = full;
  int v = end;
  std::uint8_t c = at(s, v);
  while (s != (std::uint32_t{1} << v)) {
    const std::uint32_t prev = s & ~(std::uint32_t{1} << v);
    int from = -1;
    for (std::uint32_t rest = prev & adj[v]; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (at(prev, w) == c) {
        from = w;
        break;
      }
    }
    if (from >= 0) {
      out.push_back({std::min(from, v), std::max(from, v)});
    } else {
      for (std::uint32_t rest = prev; rest != 0; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        if (at(prev, w) == c - 1) {
          from = w;
          break;
        }
      }
      --c;
    }
    s = prev;
    v = from;
  }
  return out;
}

// Edge-inclusion branch-and-bound for a linear forest with `target` edges.
class ForestSearch {
 public:
  ForestSearch(const Graph& g, int target, std::uint64_t budget)
      : n_(g.order()), edges_(g.edges()), target_(target), budget_(budget) {
    for (int v = 0; v < n_; ++v) {
      other_end_[v] = v;
      remaining_[v] = g.degree(v);
    }
  }

  std::optional<std::vector<Edge>> run() {
    if (target_ <= 0) return std::vector<Edge>{};
    if (dfs(0)) return chosen_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool dfs(std::size_t i) {
    if (++nodes_ > budget_) throw SearchBudgetExceeded("linear forest search exceeded node budget");
    const int have = static_cast<int>(chosen_.size());
    if (have == target_) return true;
    if (i == edges_.size()) return false;
    if (have + static_cast<int>(edges_.size() - i) < target_) return false;
    int capacity = 0;
    for (int v = 0; v < n_; ++v) capacity += std::min(2 - degree_[v], remaining_[v]);
    if (have + capacity / 2 < target_) return false;

    const auto [u, v] = edges_[i];
    --remaining_[u];
    --remaining_[v];
    bool found = false;
    if (degree_[u] < 2 && degree_[v] < 2 && other_end_[u] != v) {
      const int a = other_end_[u];
      const int b = other_end_[v];
      const int old_a = other_end_[a];
      const int old_b = other_end_[b];
      other_end_[a] = b;
      other_end_[b] = a;
      ++degree_[u];
      ++degree_[v];
      chosen_.push_back(edges_[i]);
      found = dfs(i + 1);
      if (!found) {
        chosen_.pop_back();
        --degree_[u];
        --degree_[v];
        other_end_[b] = old_b;
        other_end_[a] = old_a;
      }
    }
    if (!found) found = dfs(i + 1);
    ++remaining_[u];
    ++remaining_[v];
    return found;
  }

  int n_;
  std::vector<Edge> edges_;
  int target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::array<int, kMaxVertices> degree_{};
  std::array<int, kMaxVertices> other_end_{};
  std::array<int, kMaxVertices> remaining_{};
  std::vector<Edge> chosen_;
};

std::vector<Edge> component_forest(const Graph& comp, std::uint64_t& budget) {
  const int m = comp.order();
  std::vector<Edge> best = best_greedy(comp);
  if (static_cast<int>(best.size()) == m - 1) return best;
  if (m <= kDpLimit) return forest_by_subset_dp(comp);
  for (int t = static_cast<int>(best.size()) + 1; t <= m - 1; ++t) {
    ForestSearch search(comp, t, budget);
    auto found = search.run();
    budget -= std::min(budget, search.nodes());
    if (!found) break;
    best = std::move(*found);
  }
  return best;
}

std::vector<Edge> map_back(const std::vector<Edge>& edges, std::span<const int> original) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    const int u = original[static_cast<std::size_t>(e.u)];
    const int v = original[static_cast<std::size_t>(e.v)];
    out.push_back({std::min(u, v), std::max(u, v)});
  }
  return out;
}

}  // namespace

bool is_linear_forest(int n, std::span<const Edge> edges) {
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) {
    if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) return false;
    if (++degree[e.u] > 2 || ++degree[e.v] > 2) return false;
    const int ru = find(e.u);
    const int rv = find(e.v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

bool is_linear_forest(const Graph& g) {
  const auto e = g.edges();
  return is_linear_forest(g.order(), e);
}

ForestResult max_linear_forest(const Graph& g, std::uint64_t node_budget) {
  const Reduced reduced = reduce_false_twins(g);
  ForestResult result;
  for (VertexSet comp : components(reduced.graph)) {
    if (comp.size() < 2) continue;
    const Graph sub = induced_subgraph(reduced.graph, comp);
    const std::vector<int> members(comp.begin(), comp.end());
    const std::vector<Edge> local = component_forest(sub, node_budget);
    for (const Edge& e : local) {
      const Edge in_reduced{members[static_cast<std::size_t>(e.u)], members[static_cast<std::size_t>(e.v)]};
      result.witness.push_back(map_back({in_reduced}, reduced.original).front());
    }
  }
  std::sort(result.witness.begin(), result.witness.end());
  result.size = static_cast<int>(result.witness.size());
  return result;
}

std::optional<std::vector<Edge>> find_linear_forest(const Graph& g, int size, std::uint64_t node_budget) {
  if (size < 0) return std::nullopt;
  const Reduced reduced = reduce_false_twins(g);
  ForestSearch search(reduced.graph, size, node_budget);
  auto found = search.run();
  if (!found) return std::nullopt;
  auto out = map_back(*found, reduced.original);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_lk_free(const Graph& g, int k, std::uint64_t node_budget) {
  if (k <= 0) return false;
  return max_linear_forest(g, node_budget).size <= k - 1;
}

MatchingResult matching_number(const Graph& g) {
  const int n = g.order();
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> base(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n));
  std::vector<char> blossom(static_cast<std::size_t>(n));
  std::vector<int> queue(static_cast<std::size_t>(n));

  auto lca = [&](int a, int b) {
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    while (true) {
      a = base[a];
      on_path[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (on_path[b]) return b;
      b = parent[match[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int v = queue[head++];
      for (int to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue[tail++] = i;
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          queue[tail++] = match[to];
        }
      }
    }
    return -1;
  };

  for (int i = 0; i < n; ++i) {
    if (match[i] != -1) continue;
    int v = find_path(i);
    while (v != -1) {
      const int pv = parent[v];
      const int ppv = match[pv];
      match[v] = pv;
      match[pv] = v;
      v = ppv;
    }
  }

  MatchingResult result;
  for (int v = 0; v < n; ++v)
    if (match[v] > v) result.witness.push_back({v, match[v]});
  result.size = static_cast<int>(result.witness.size());
  return result;
}

}  // namespace linfor
