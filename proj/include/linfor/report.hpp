#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linfor/wide_count.hpp"

namespace linfor {

/// One checked claim: the closed form, what the oracle found, and the verdict.
struct TheoremReport {
  /// "1".."7".
  std::string theorem;
  /// "equality" (pass iff oracle == formula), "bound" (oracle <= formula plus
  /// attainment), "construction" (host-side stability properties) or "scan"
  /// (exhaustive stability scan).
  std::string kind;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::optional<std::int64_t> d;
  WideCount formula_value;
  WideCount oracle_value;
  /// graph6 records of the graphs attaining oracle_value (or counter-instances).
  std::vector<std::string> witnesses;
  bool pass = false;
  /// Extra ordered key/value facts, e.g. the host attaining the bound.
  std::vector<std::pair<std::string, std::string>> details;

  void add_detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
};

/// A full report: the command that produced it and one row per checked tuple.
struct ReportDocument {
  std::string command;
  std::vector<TheoremReport> rows;

  bool all_pass() const;
};

/// {"schema":1,"command":..,"all_pass":..,"rows":[..]}; counts are JSON numbers
/// when they fit 64 bits and decimal strings otherwise. Ends with a newline.
std::string to_json(const ReportDocument& doc);

/// Header theorem,kind,n,k,r,d,formula_value,oracle_value,verdict,witnesses,details;
/// witnesses are ';'-joined, details are ';'-joined key=value pairs, and fields
/// containing ',', '"' or newlines are quoted.
std::string to_csv(const ReportDocument& doc);

}  // namespace linfor
