#include "linfor/cliques.hpp"

#include <bit>
#include <stdexcept>

namespace linfor {

namespace {

struct Counter {
  const std::uint64_t* forward;
  int max_size;
  std::uint64_t* out;

  // The current clique has `size` vertices; cand are common forward neighbours.
  void expand(std::uint64_t cand, int size) const {
    if (size + 1 == max_size) {
      out[max_size] += static_cast<std::uint64_t>(std::popcount(cand));
      return;
    }
    out[size + 1] += static_cast<std::uint64_t>(std::popcount(cand));
    while (cand != 0) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      const std::uint64_t next = cand & forward[v];
      if (next != 0) expand(next, size + 1);
    }
  }
};

}  // namespace

namespace detail {

void count_cliques_by_size(std::span<const std::uint64_t> rows, int max_size,
                           std::array<std::uint64_t, kMaxVertices + 1>& out) {
  out.fill(0);
  out[0] = 1;
  const int n = static_cast<int>(rows.size());
  if (n == 0 || max_size < 1) return;

  // Degeneracy order: repeatedly peel a minimum-degree vertex.
  std::array<int, kMaxVertices> position{};
  std::array<int, kMaxVertices> degree{};
  std::uint64_t alive = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int v = 0; v < n; ++v) degree[v] = std::popcount(rows[v]);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (best < 0 || degree[v] < degree[best]) best = v;
    }
    position[best] = step;
    alive &= ~(std::uint64_t{1} << best);
    for (std::uint64_t nb = rows[best] & alive; nb != 0; nb &= nb - 1) --degree[std::countr_zero(nb)];
  }

  // Relabel so that forward neighbourhoods are the higher bits.
  std::array<std::uint64_t, kMaxVertices> forward{};
  for (int v = 0; v < n; ++v) {
    std::uint64_t row = 0;
    for (std::uint64_t nb = rows[v]; nb != 0; nb &= nb - 1) row |= std::uint64_t{1} << position[std::countr_zero(nb)];
    const std::uint64_t higher = position[v] == 63 ? 0 : ~((std::uint64_t{2} << position[v]) - 1);
    forward[position[v]] = row & higher;
  }

  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  Counter counter{forward.data(), max_size, out.data()};
  counter.expand(all, 0);
}

}  // namespace detail

int CliqueVector::clique_number() const {
  int omega = 0;
  for (int r = 1; r <= size(); ++r)
    if ((*this)[r] != WideCount{0}) omega = r;
  return omega;
}

WideCount count_cliques(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("count_cliques: r must be at least 1");
  if (r > g.order()) return WideCount{0};
  std::array<std::uint64_t, kMaxVertices + 1> out{};
  detail::count_cliques_by_size(g.rows(), r, out);
  return WideCount(out[static_cast<std::size_t>(r)]);
}

CliqueVector clique_vector(const Graph& g) {
  std::array<std::uint64_t, kMaxVertices + 1> out{};
  detail::count_cliques_by_size(g.rows(), g.order(), out);
  std::vector<WideCount> counts;
  counts.reserve(static_cast<std::size_t>(g.order()));
  for (int r = 1; r <= g.order(); ++r) counts.emplace_back(out[static_cast<std::size_t>(r)]);
  return CliqueVector(std::move(counts));
}

}  // namespace linfor
