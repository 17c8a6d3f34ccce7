#include "linfor/constructions.hpp"

#include <cmath>
#include <stdexcept>

namespace linfor {

std::string_view to_string(HostVariant v) {
  switch (v) {
    case HostVariant::plain: return "plain";
    case HostVariant::plus: return "plus";
    case HostVariant::plusplus: return "plusplus";
  }
  return "plain";
}

std::optional<HostVariant> parse_variant(std::string_view text) {
  if (text == "plain") return HostVariant::plain;
  if (text == "plus") return HostVariant::plus;
  if (text == "plusplus") return HostVariant::plusplus;
  return std::nullopt;
}

int extra_edges(HostVariant v) {
  switch (v) {
    case HostVariant::plain: return 0;
    case HostVariant::plus: return 1;
    case HostVariant::plusplus: return 2;
  }
  return 0;
}

bool ConstructionParams::valid() const {
  return a >= 0 && part_b() >= 0 && part_c() >= 0 && part_c() >= 2 * extra_edges(variant);
}

void ConstructionParams::validate() const {
  if (a < 0) throw std::invalid_argument(name() + ": |A| = a must be nonnegative");
  if (part_b() < 0) throw std::invalid_argument(name() + ": |B| = k - 2a is negative");
  if (part_c() < 0) throw std::invalid_argument(name() + ": |C| = n - k + a is negative");
  if (part_c() < 2 * extra_edges(variant)) {
    throw std::invalid_argument(name() + ": |C| too small for the extra edges of the variant");
  }
}

std::string ConstructionParams::name() const {
  std::string prefix = variant == HostVariant::plain  ? "H"
                       : variant == HostVariant::plus ? "H+"
                                                      : "H++";
  return prefix + "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(a) + ")";
}

Graph build_host(const ConstructionParams& p) {
  p.validate();
  if (p.n > kMaxVertices) throw std::out_of_range(p.name() + ": order exceeds the dense cap of 64");
  const int n = static_cast<int>(p.n);
  const int a = static_cast<int>(p.a);
  const int c0 = static_cast<int>(p.k - p.a);  // first vertex of C
  Graph g(n);
  for (int u = 0; u < c0; ++u)
    for (int v = u + 1; v < c0; ++v) g.add_edge(u, v);
  for (int u = 0; u < a; ++u)
    for (int v = c0; v < n; ++v) g.add_edge(u, v);
  for (int e = 0; e < extra_edges(p.variant); ++e) g.add_edge(c0 + 2 * e, c0 + 2 * e + 1);
  return g;
}

WideCount h_r(std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t r) {
  ConstructionParams p{n, k, a, HostVariant::plain};
  p.validate();
  if (r < 1) throw std::invalid_argument("h_r: r must be at least 1");
  return binomial_signed(k - a, r) + WideCount(static_cast<std::uint64_t>(n - k + a)) * binomial_signed(a, r - 1);
}

WideCount host_clique_count(const ConstructionParams& p, std::int64_t r) {
  p.validate();
  WideCount base = h_r(p.n, p.k, p.a, r);
  const auto extras = static_cast<std::uint64_t>(extra_edges(p.variant));
  return base + WideCount(extras) * binomial_signed(p.a, r - 2);
}

double clique_bound_from_edges(std::uint64_t m, int r) {
  if (r < 3) throw std::invalid_argument("clique_bound_from_edges: r must be at least 3");
  const double x = (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(m))) / 2.0;
  if (x < r) return 0.0;
  double value = 1.0;
  for (int i = 0; i < r; ++i) value *= (x - i) / (i + 1);
  return value;
}

}  // namespace linfor
