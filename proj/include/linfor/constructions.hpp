#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "linfor/graph.hpp"
#include "linfor/wide_count.hpp"

namespace linfor {

/// plain: H(n,k,a). plus: one extra edge inside C. plusplus: two independent edges inside C.
enum class HostVariant { plain, plus, plusplus };

std::string_view to_string(HostVariant v);
std::optional<HostVariant> parse_variant(std::string_view text);
/// Number of extra edges placed inside C.
int extra_edges(HostVariant v);

/// Parameters of the host H(n, k, a): |A| = a, |B| = k - 2a, |C| = n - k + a.
struct ConstructionParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t a = 0;
  HostVariant variant = HostVariant::plain;

  std::int64_t part_a() const { return a; }
  std::int64_t part_b() const { return k - 2 * a; }
  std::int64_t part_c() const { return n - k + a; }

  bool valid() const;
  /// Throws std::invalid_argument describing the first violated part-size constraint.
  void validate() const;
  /// Human-readable name such as "H+(20,6,2)".
  std::string name() const;

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

/// Materializes the host with A = {0..a-1}, B = {a..k-a-1}, C = {k-a..n-1}.
/// Extra C-edges are (c0,c1) and, for plusplus, (c2,c3).
/// Throws std::invalid_argument for invalid parts and std::out_of_range when n > 64.
Graph build_host(const ConstructionParams& p);

/// h_r(n,k,a) = C(k-a, r) + (n-k+a) C(a, r-1).
WideCount h_r(std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t r);

/// Closed-form N_r of the host, any n. plus adds C(a, r-2), plusplus adds 2 C(a, r-2):
/// each extra C-edge has common neighbourhood exactly A.
WideCount host_clique_count(const ConstructionParams& p, std::int64_t r);

/// Upper bound C(x, r) on N_r for a graph with m edges, where C(x, 2) = m and
/// C(x, r) is the real falling-factorial binomial. Zero when x < r.
double clique_bound_from_edges(std::uint64_t m, int r);

}  // namespace linfor
