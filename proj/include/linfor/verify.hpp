#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linfor/census.hpp"
#include "linfor/forests.hpp"
#include "linfor/report.hpp"
#include "linfor/wide_count.hpp"

namespace linfor {

/// max{h_r(n,k,d), h_r(n,k,⌊(k-1)/2⌋)}: the most r-cliques in an L_k-free graph
/// on n vertices with minimum degree at least d.
WideCount forest_formula(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t d = 0);

/// max{h_r(n,2k+1,d), h_r(n,2k+1,k)}: the same for graphs with matching number <= k.
WideCount matching_formula(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t d = 0);

/// Largest N_r over L_k-free graphs of the census (with delta >= d if given)
/// against forest_formula. Without d this is an equality check (theorem "1"
/// for r = 2, "2" otherwise); with d it is a bound check (theorem "3") that
/// also requires both H(n,k,d) and H(n,k,⌊(k-1)/2⌋) to lie in the class and
/// attain their closed forms. A census over input graphs only supports the
/// bound direction. Throws std::invalid_argument unless 1 <= k <= n-1,
/// 2 <= r <= n and 0 <= d <= ⌊(k-1)/2⌋.
TheoremReport brute_ex(const GraphCensus& census, int r, int k, std::optional<int> d = std::nullopt,
                       std::uint64_t budget = kDefaultSearchBudget);
TheoremReport brute_ex(int n, int r, int k, std::optional<int> d = std::nullopt, const CensusOptions& options = {});

/// Largest N_r over census graphs with nu <= k (and delta >= d) against
/// matching_formula. r = 2 without d is the equality check "5" (n >= 2k+1);
/// otherwise the bound check "6" with d defaulting to 0, requiring n >= 2k+2,
/// 0 <= d <= k, and attainment by H(n,2k+1,d) and H(n,2k+1,k).
TheoremReport brute_ex_matching(const GraphCensus& census, int r, int k, std::optional<int> d = std::nullopt);
TheoremReport brute_ex_matching(int n, int r, int k, std::optional<int> d = std::nullopt,
                                const CensusOptions& options = {});

struct SuiteOptions {
  /// Minimum degree parameter of the thresholds checked for the hosts.
  int d = 1;
  /// Random proper subgraphs drawn per host.
  int samples = 100;
  std::uint64_t seed = 20240601;
  std::uint64_t budget = kDefaultSearchBudget;
};

/// Construction-side check of the linear-forest stability statement at one
/// order, one row (theorem "4") per listed host: the host is L_k-free, exceeds
/// the threshold for every 2 <= r <= ⌊(k-3)/2⌋, certifies in a listed host, as
/// do `samples` random proper subgraphs, and every host-plus-one-edge graph
/// either stops being L_k-free or stays explained (below threshold or certified).
std::vector<TheoremReport> stability_construction_suite(int n, int k, const SuiteOptions& options = {});

/// The same for the matching version (theorem "7"), 2 <= r <= k-1, with
/// "nu <= k" in place of L_k-freeness.
std::vector<TheoremReport> matching_construction_suite(int n, int k, const SuiteOptions& options = {});

/// Every labeled graph on n vertices that satisfies the hypotheses of the
/// stability statement apart from the order bound and exceeds its threshold
/// must embed in a listed host. One row; the witnesses are the graphs that
/// do not. Binding only when r <= ⌊(k-3)/2⌋ (resp. r <= k-1); otherwise the
/// row is advisory and passes.
TheoremReport stability_scan(int n, int k, int r, int d, const CensusOptions& options = {});
TheoremReport matching_stability_scan(int n, int k, int r, int d, const CensusOptions& options = {});

}  // namespace linfor
