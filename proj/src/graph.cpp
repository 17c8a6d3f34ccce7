#include "linfor/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace linfor {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::out_of_range("graph order " + std::to_string(n) + " outside 0..64");
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

Graph Graph::with_edge(int u, int v) const {
  Graph h = *this;
  h.add_edge(u, v);
  return h;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : VertexSet(adj_[u] & ~((std::uint64_t{2} << u) - 1))) out.push_back({u, v});
  }
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> seq;
  seq.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) seq.push_back(g.degree(v));
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

int edges_between(const Graph& g, VertexSet s, VertexSet t) {
  // Ordered pairs count edges inside s & t twice.
  int ordered = 0;
  for (int u : s) ordered += (g.neighbors(u) & t).size();
  VertexSet both = s & t;
  int inside = 0;
  for (int u : both) inside += (g.neighbors(u) & both).size();
  return ordered - inside / 2;
}

Graph induced_subgraph(const Graph& g, VertexSet u) {
  std::vector<int> members(u.begin(), u.end());
  Graph h(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (g.has_edge(members[i], members[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.order() + b.order());
  for (const Edge& e : a.edges()) h.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) h.add_edge(e.u + a.order(), e.v + a.order());
  return h;
}

Graph relabel(const Graph& g, std::span<const int> new_label) {
  if (static_cast<int>(new_label.size()) != g.order()) throw std::invalid_argument("relabel: size mismatch");
  VertexSet seen;
  for (int x : new_label) {
    if (x < 0 || x >= g.order() || seen.contains(x)) throw std::invalid_argument("relabel: not a permutation");
    seen.insert(x);
  }
  Graph h(g.order());
  for (const Edge& e : g.edges()) h.add_edge(new_label[e.u], new_label[e.v]);
  return h;
}

bool is_spanning_subgraph(const Graph& h, const Graph& g) {
  if (h.order() != g.order()) return false;
  for (int v = 0; v < h.order(); ++v) {
    if (!h.neighbors(v).is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace linfor
