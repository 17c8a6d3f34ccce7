#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linfor/constructions.hpp"
#include "linfor/embedding.hpp"
#include "linfor/forests.hpp"
#include "linfor/graph.hpp"
#include "linfor/wide_count.hpp"

namespace linfor {

/// Hosts a graph above the linear-forest stability threshold should embed in:
/// H(n,k,⌊(k-1)/2⌋), H(n,k,⌊(k-3)/2⌋), H+(n,k-1,⌊(k-3)/2⌋) and, for even k,
/// H++(n,k-2,⌊(k-3)/2⌋). Hosts with invalid parts at this n are left out.
std::vector<ConstructionParams> stability_hosts(std::int64_t n, std::int64_t k);

/// max{h_r(n,k,d), h_r(n,k,⌊(k-5)/2⌋)}. Throws std::invalid_argument unless
/// k >= 5, 0 <= 2d <= k and n >= k.
WideCount stability_threshold(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t d);

/// Hosts for the matching version: H(n,2k+1,k) and H(n,2k+1,k-1).
std::vector<ConstructionParams> matching_stability_hosts(std::int64_t n, std::int64_t k);

/// max{h_r(n,2k+1,d), h_r(n,2k+1,k-2)}. Throws std::invalid_argument unless
/// k >= 2, 0 <= d <= k and n >= 2k+1.
WideCount matching_stability_threshold(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t d);

struct HostAttempt {
  ConstructionParams host;
  std::optional<EmbeddingCertificate> certificate;
};

struct StabilityReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::int64_t d = 0;
  WideCount clique_count;
  WideCount threshold;
  bool above_threshold = false;
  /// The threshold maximum is attained by its h_r(n, ., d) term.
  bool threshold_from_min_degree = false;
  /// n > k^5 (resp. (2k+1)^5): never true at desk scale, reported only.
  bool order_hypothesis = false;
  /// r <= ⌊(k-3)/2⌋ (resp. r <= k-1).
  bool r_hypothesis = false;
  /// Embedding attempts, one per listed host; empty when below threshold
  /// unless every host was requested.
  std::vector<HostAttempt> attempts;

  /// First successful attempt, if any.
  const HostAttempt* certified() const;
  /// Below threshold, or embedded in some listed host.
  bool explained() const { return !above_threshold || certified() != nullptr; }
};

struct StabilityOptions {
  std::uint64_t budget = kDefaultSearchBudget;
  /// Attempt the embeddings even when the graph is below the threshold.
  bool attempt_always = false;
  /// Skip the class-membership check because the caller already knows it
  /// holds, e.g. for subgraphs of a verified host (both classes are closed
  /// under taking subgraphs).
  bool membership_known = false;
};

/// Requires g to be L_k-free with minimum degree >= d (std::invalid_argument
/// otherwise, as for thresholds that are not defined at these parameters).
StabilityReport classify_stability(const Graph& g, int k, int r, int d, const StabilityOptions& options = {});

/// Requires nu(g) <= k and minimum degree >= d.
StabilityReport classify_matching_stability(const Graph& g, int k, int r, int d,
                                            const StabilityOptions& options = {});

}  // namespace linfor
