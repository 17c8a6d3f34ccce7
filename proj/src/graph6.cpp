#include "linfor/graph6.hpp"

#include <fstream>
#include <istream>

namespace linfor {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) {
    throw Graph6Error("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) + " outside 63..126");
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty record");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw Graph6Error("graph6: order beyond 64 is not supported");
    if (text.size() < 4) throw Graph6Error("graph6: truncated size header");
    n = (static_cast<long>(sextet(text[1])) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    pos = 4;
    if (n < 63) throw Graph6Error("graph6: long size header used for order below 63");
  }
  if (n > kMaxVertices) throw Graph6Error("graph6: order " + std::to_string(n) + " beyond 64 is not supported");

  const auto bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw Graph6Error("graph6: truncated edge body");
  if (text.size() - pos > bytes) throw Graph6Error("graph6: trailing bytes after edge body");

  Graph g(static_cast<int>(n));
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int word = sextet(text[pos + bit / 6]);
      if ((word >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    int word = sextet(text[pos + bit / 6]);
    if ((word & ((1 << (6 - bit % 6)) - 1)) != 0) throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw Graph6Error("graph6: order " + std::to_string(n) + " needs a multi-byte header");
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int word = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Graph6Error("graph6: cannot open " + path);
  return read_graph6(in);
}

}  // namespace linfor
