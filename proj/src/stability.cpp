#include "linfor/stability.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "linfor/cliques.hpp"

namespace linfor {

namespace {

ConstructionParams plain(std::int64_t n, std::int64_t k, std::int64_t a, HostVariant v = HostVariant::plain) {
  return ConstructionParams{n, k, a, v};
}

void require_valid(const ConstructionParams& p, const char* what) {
  if (!p.valid()) {
    throw std::invalid_argument(std::string(what) + ": threshold term " + p.name() + " has invalid parts");
  }
}

// n > base^5 without overflow.
bool exceeds_fifth_power(std::int64_t n, std::int64_t base) {
  std::int64_t power = 1;
  for (int i = 0; i < 5; ++i) {
    if (power > n / base) return false;
    power *= base;
  }
  return n > power;
}

StabilityReport classify(const Graph& g, const std::vector<ConstructionParams>& hosts, StabilityReport report,
                         const StabilityOptions& options) {
  if (report.above_threshold || options.attempt_always) {
    for (const ConstructionParams& host : hosts) report.attempts.push_back({host, embeds_in_host(g, host)});
  }
  return report;
}

}  // namespace

const HostAttempt* StabilityReport::certified() const {
  for (const HostAttempt& a : attempts)
    if (a.certificate) return &a;
  return nullptr;
}

std::vector<ConstructionParams> stability_hosts(std::int64_t n, std::int64_t k) {
  std::vector<ConstructionParams> candidates = {
      plain(n, k, (k - 1) / 2),
      plain(n, k, (k - 3) / 2),
      plain(n, k - 1, (k - 3) / 2, HostVariant::plus),
  };
  if (k % 2 == 0) candidates.push_back(plain(n, k - 2, (k - 3) / 2, HostVariant::plusplus));
  std::vector<ConstructionParams> out;
  for (const auto& p : candidates)
    if (k >= 3 && p.valid()) out.push_back(p);
  return out;
}

WideCount stability_threshold(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t d) {
  if (k < 5) throw std::invalid_argument("stability threshold needs k >= 5 (got k=" + std::to_string(k) + ")");
  if (d < 0 || 2 * d > k) {
    throw std::invalid_argument("stability threshold needs 0 <= d <= k/2 (got d=" + std::to_string(d) + ")");
  }
  require_valid(plain(n, k, d), "stability_threshold");
  require_valid(plain(n, k, (k - 5) / 2), "stability_threshold");
  return std::max(h_r(n, k, d, r), h_r(n, k, (k - 5) / 2, r));
}

std::vector<ConstructionParams> matching_stability_hosts(std::int64_t n, std::int64_t k) {
  std::vector<ConstructionParams> out;
  for (const auto& p : {plain(n, 2 * k + 1, k), plain(n, 2 * k + 1, k - 1)})
    if (k >= 1 && p.valid()) out.push_back(p);
  return out;
}

WideCount matching_stability_threshold(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t d) {
  if (k < 2) throw std::invalid_argument("matching stability threshold needs k >= 2 (got k=" + std::to_string(k) + ")");
  if (d < 0 || d > k) {
    throw std::invalid_argument("matching stability threshold needs 0 <= d <= k (got d=" + std::to_string(d) + ")");
  }
  require_valid(plain(n, 2 * k + 1, d), "matching_stability_threshold");
  require_valid(plain(n, 2 * k + 1, k - 2), "matching_stability_threshold");
  return std::max(h_r(n, 2 * k + 1, d, r), h_r(n, 2 * k + 1, k - 2, r));
}

StabilityReport classify_stability(const Graph& g, int k, int r, int d, const StabilityOptions& options) {
  const std::int64_t n = g.order();
  StabilityReport report;
  report.n = n;
  report.k = k;
  report.r = r;
  report.d = d;
  report.threshold = stability_threshold(n, k, r, d);
  if (!options.membership_known && !is_lk_free(g, k, options.budget)) {
    throw std::invalid_argument("classify_stability: graph is not L_" + std::to_string(k) + "-free");
  }
  if (n > 0 && g.min_degree() < d) {
    throw std::invalid_argument("classify_stability: minimum degree below " + std::to_string(d));
  }
  report.clique_count = count_cliques(g, r);
  report.above_threshold = report.clique_count > report.threshold;
  report.threshold_from_min_degree = h_r(n, k, d, r) >= h_r(n, k, (k - 5) / 2, r);
  report.order_hypothesis = exceeds_fifth_power(n, k);
  report.r_hypothesis = r <= (k - 3) / 2;
  return classify(g, stability_hosts(n, k), std::move(report), options);
}

StabilityReport classify_matching_stability(const Graph& g, int k, int r, int d, const StabilityOptions& options) {
  const std::int64_t n = g.order();
  StabilityReport report;
  report.n = n;
  report.k = k;
  report.r = r;
  report.d = d;
  report.threshold = matching_stability_threshold(n, k, r, d);
  if (!options.membership_known && matching_number(g).size > k) {
    throw std::invalid_argument("classify_matching_stability: matching number exceeds " + std::to_string(k));
  }
  if (n > 0 && g.min_degree() < d) {
    throw std::invalid_argument("classify_matching_stability: minimum degree below " + std::to_string(d));
  }
  report.clique_count = count_cliques(g, r);
  report.above_threshold = report.clique_count > report.threshold;
  report.threshold_from_min_degree = h_r(n, 2 * k + 1, d, r) >= h_r(n, 2 * k + 1, k - 2, r);
  report.order_hypothesis = exceeds_fifth_power(n, 2 * k + 1);
  report.r_hypothesis = r <= k - 1;
  return classify(g, matching_stability_hosts(n, k), std::move(report), options);
}

}  // namespace linfor
