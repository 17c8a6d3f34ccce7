#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linfor/constructions.hpp"
#include "linfor/graph.hpp"

namespace linfor {

enum class Part : unsigned char { A, B, C };

/// A labeled map of g into a host: parts[v] is the host part receiving vertex v,
/// extra_edges are the edges of g placed on the host's extra C-edges.
struct EmbeddingCertificate {
  ConstructionParams host;
  std::vector<Part> parts;
  std::vector<Edge> extra_edges;
};

/// Is g (on exactly n vertices) a subgraph of the host, up to relabeling?
///
/// Equivalently: can V(g) be split into A, B, C with the host's part sizes so
/// that no edge joins B and C and the edges inside C form at most as many
/// independent edges as the variant provides. Searches over which vertices go
/// to A, forcing into A every vertex whose degree outside A is too large for
/// B or C; for a fixed A the rest is decided exactly from the components of
/// g - A. Deterministic: branches on the undecided vertex of highest degree
/// outside A, lowest label first.
std::optional<EmbeddingCertificate> embeds_in_host(const Graph& g, const ConstructionParams& host);

/// Independent check of a certificate: part sizes, no B–C edge, and the edges
/// inside C are exactly the listed extra edges, independent and few enough.
/// On failure `why` (if given) receives a description.
bool certificate_valid(const Graph& g, const EmbeddingCertificate& cert, std::string* why = nullptr);

/// "A:0,1;B:2,3;C:4,5;extra:4-5", vertices in increasing order.
std::string describe(const EmbeddingCertificate& cert);

}  // namespace linfor
