#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "linfor/graph.hpp"
#include "linfor/wide_count.hpp"

namespace linfor {

/// N_r(G) for r = 1..n.
class CliqueVector {
 public:
  CliqueVector() = default;
  explicit CliqueVector(std::vector<WideCount> counts) : counts_(std::move(counts)) {}

  /// N_r for 1 <= r <= size(); zero for larger r.
  WideCount operator[](int r) const {
    return r >= 1 && r <= size() ? counts_[static_cast<std::size_t>(r - 1)] : WideCount{0};
  }
  int size() const { return static_cast<int>(counts_.size()); }
  /// Largest r with N_r > 0.
  int clique_number() const;
  const std::vector<WideCount>& counts() const { return counts_; }

  friend bool operator==(const CliqueVector&, const CliqueVector&) = default;

 private:
  std::vector<WideCount> counts_;
};

/// Number of r-vertex cliques of g (r > n gives 0). Throws std::invalid_argument for r < 1.
WideCount count_cliques(const Graph& g, int r);

CliqueVector clique_vector(const Graph& g);

namespace detail {

/// out[r] = number of r-cliques, r = 1..max_size, of the graph whose row v is
/// rows[v]. out[0] is set to 1 (the empty clique). Vertices are expanded in a
/// degeneracy order so every candidate set is a forward neighbourhood.
void count_cliques_by_size(std::span<const std::uint64_t> rows, int max_size,
                           std::array<std::uint64_t, kMaxVertices + 1>& out);

}  // namespace detail

}  // namespace linfor
