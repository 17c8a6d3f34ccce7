#pragma once

#include <vector>

#include "linfor/graph.hpp"

namespace linfor {

/// position[v] is where vertex v lands in the canonical form.
struct CanonicalLabeling {
  std::vector<int> position;
  Graph form;
};

/// Canonical form by colour refinement plus individualization, keeping the
/// lexicographically smallest adjacency rows over the search leaves. Cells are
/// only branched on one representative per twin class, since swapping twins is
/// an automorphism fixing everything individualized so far.
CanonicalLabeling canonical_labeling(const Graph& g);

inline Graph canonical_form(const Graph& g) { return canonical_labeling(g).form; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

}  // namespace linfor
