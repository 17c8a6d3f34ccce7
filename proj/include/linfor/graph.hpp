#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace linfor {

inline constexpr int kMaxVertices = 64;

/// A set of vertices 0..63, one bit per vertex.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  /// {0, .., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Lowest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct Edge {
  int u = 0;
  int v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 64 labeled vertices, one adjacency word per vertex.
///
/// Rows beyond order() are always zero, so defaulted equality compares labeled graphs.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices. Throws std::out_of_range unless 0 <= n <= 64.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int edge_count() const;
  int min_degree() const;
  int max_degree() const;

  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  Graph with_edge(int u, int v) const;

  /// Edges with u < v in (u, v) lexicographic order.
  std::vector<Edge> edges() const;
  std::span<const std::uint64_t> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Degrees sorted nonincreasing.
std::vector<int> degree_sequence(const Graph& g);

/// Number of edges uv with u in s and v in t, each edge counted once; e(S) when s == t.
int edges_between(const Graph& g, VertexSet s, VertexSet t);

/// Subgraph induced by u, relabeled 0..|u|-1 in increasing vertex order.
Graph induced_subgraph(const Graph& g, VertexSet u);

/// Vertices of a are 0..a.n-1, vertices of b follow.
Graph disjoint_union(const Graph& a, const Graph& b);

/// new_label[v] is the image of v; must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const int> new_label);

/// Is h a subgraph of g on the same labeled vertex set?
bool is_spanning_subgraph(const Graph& h, const Graph& g);

/// Connected components, each as a vertex set, ordered by lowest vertex.
std::vector<VertexSet> components(const Graph& g);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// K_{1,leaves} with the center at vertex 0.
Graph star_graph(int leaves);

}  // namespace linfor
