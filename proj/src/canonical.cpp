#include "linfor/canonical.hpp"

#include <algorithm>
#include <map>

namespace linfor {

namespace {

using Partition = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into each splitter cell until equitable.
// Sub-cells are ordered by increasing count, which keeps the result
// independent of vertex labels.
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      VertexSet splitter;
      for (int v : cells[s]) splitter.insert(v);
      for (std::size_t x = 0; x < cells.size(); ++x) {
        if (cells[x].size() < 2) continue;
        std::map<int, std::vector<int>> groups;
        for (int v : cells[x]) groups[(g.neighbors(v) & splitter).size()].push_back(v);
        if (groups.size() < 2) continue;
        Partition replacement;
        for (auto& [count, members] : groups) replacement.push_back(std::move(members));
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), replacement.begin(), replacement.end());
        changed = true;
        break;
      }
    }
  }
}

bool twins(const Graph& g, int u, int v) {
  VertexSet nu = g.neighbors(u);
  VertexSet nv = g.neighbors(v);
  nu.erase(v);
  nv.erase(u);
  return nu == nv;
}

struct Search {
  const Graph& g;
  bool have_best = false;
  std::vector<std::uint64_t> best_rows;
  std::vector<int> best_position;

  void leaf(const Partition& cells) {
    const int n = g.order();
    std::vector<int> position(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cells.size(); ++i) position[cells[i].front()] = static_cast<int>(i);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      for (int w : g.neighbors(v)) rows[position[v]] |= std::uint64_t{1} << position[w];
    }
    if (!have_best || rows < best_rows) {
      have_best = true;
      best_rows = std::move(rows);
      best_position = std::move(position);
    }
  }

  void run(Partition cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto index = static_cast<std::size_t>(target - cells.begin());
    const std::vector<int> members = *target;
    std::vector<int> tried;
    for (int v : members) {
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(g, t, v); })) continue;
      tried.push_back(v);
      Partition next = cells;
      std::vector<int> rest;
      for (int w : members)
        if (w != v) rest.push_back(w);
      next[index] = {v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(index) + 1, rest);
      run(std::move(next));
    }
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  const int n = g.order();
  CanonicalLabeling out;
  if (n == 0) {
    out.form = Graph(0);
    return out;
  }
  Partition start(1);
  for (int v = 0; v < n; ++v) start[0].push_back(v);
  Search search{g, false, {}, {}};
  search.run(std::move(start));
  out.position = search.best_position;
  out.form = Graph(n);
  for (int v = 0; v < n; ++v) {
    for (int w : VertexSet(search.best_rows[v])) {
      if (w > v) out.form.add_edge(v, w);
    }
  }
  return out;
}

}  // namespace linfor
