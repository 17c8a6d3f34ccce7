#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linfor/graph.hpp"

namespace linfor {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes one graph6 record (no trailing newline). Accepts the 1-byte and the
/// 4-byte size headers, but only orders up to 64. An optional ">>graph6<<" prefix is skipped.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6 with a 1-byte size header; throws Graph6Error when g.order() > 62.
std::string to_graph6(const Graph& g);

/// Reads one record per line, skipping blank lines.
std::vector<Graph> read_graph6(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace linfor
