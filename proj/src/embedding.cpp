#include "linfor/embedding.hpp"

#include <algorithm>
#include <sstream>

namespace linfor {

namespace {

struct EmbedSearch {
  const Graph& g;
  int a = 0;
  int b = 0;
  int extras = 0;
  // Outside A, a vertex of B has at most b - 1 neighbours and a vertex of C at most one.
  int threshold = 0;
  VertexSet in_a;
  VertexSet excluded;
  std::optional<EmbeddingCertificate> found;
  ConstructionParams host;

  int degree_within(int v, VertexSet set) const { return (g.neighbors(v) & set).size(); }

  bool run() {
    const VertexSet rest = g.vertices() - in_a;
    // A vertex kept out of A loses at most `room` neighbours to the rest of A.
    const int room = a - in_a.size();
    VertexSet forced;
    for (int v : rest)
      if (degree_within(v, rest) > threshold + room) forced.insert(v);
    if (!(forced & excluded).empty()) return false;
    if (in_a.size() + forced.size() > a) return false;
    if (!forced.empty()) {
      const VertexSet saved = in_a;
      in_a |= forced;
      const bool ok = run();
      in_a = saved;
      return ok;
    }
    if (complete()) return true;
    if (in_a.size() == a) return false;

    // Highest degree outside A first (lowest label on ties): in a subgraph of
    // the host those are the vertices of A.
    int pick = -1;
    int pick_degree = 0;
    for (int v : rest - excluded) {
      const int deg = degree_within(v, rest);
      if (deg > pick_degree) {
        pick = v;
        pick_degree = deg;
      }
    }
    if (pick < 0) return false;
    in_a.insert(pick);
    if (run()) return true;
    in_a.erase(pick);
    excluded.insert(pick);
    const bool ok = run();
    excluded.erase(pick);
    return ok;
  }

  // With A fixed up to padding by isolated vertices of g - A: components of
  // g - A other than single edges must sit in B; single edges go to B or onto
  // an extra C-edge; isolated vertices fill whatever remains.
  bool complete() {
    const VertexSet rest = g.vertices() - in_a;
    const Graph sub = induced_subgraph(g, rest);
    std::vector<int> rest_list(rest.begin(), rest.end());

    VertexSet big;
    std::vector<Edge> pairs;
    std::vector<int> isolated;
    for (VertexSet comp : components(sub)) {
      VertexSet original;
      for (int v : comp) original.insert(rest_list[static_cast<std::size_t>(v)]);
      if (original.size() == 1) {
        isolated.push_back(original.front());
      } else if (original.size() == 2) {
        const int u = original.front();
        original.erase(u);
        pairs.push_back({u, original.front()});
      } else {
        big |= original;
      }
    }
    const int pad = a - in_a.size();
    const int spare = static_cast<int>(isolated.size()) - pad;
    if (spare < 0) return false;
    const int pair_count = static_cast<int>(pairs.size());
    for (int j = std::max(0, pair_count - extras); j <= pair_count; ++j) {
      const int fill = b - big.size() - 2 * j;
      if (fill < 0 || fill > spare) continue;
      EmbeddingCertificate cert;
      cert.host = host;
      cert.parts.assign(static_cast<std::size_t>(g.order()), Part::C);
      for (int v : in_a) cert.parts[static_cast<std::size_t>(v)] = Part::A;
      for (int i = 0; i < pad; ++i) cert.parts[static_cast<std::size_t>(isolated[static_cast<std::size_t>(i)])] = Part::A;
      for (int v : big) cert.parts[static_cast<std::size_t>(v)] = Part::B;
      for (int i = 0; i < j; ++i) {
        cert.parts[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].u)] = Part::B;
        cert.parts[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].v)] = Part::B;
      }
      for (int i = 0; i < fill; ++i) {
        cert.parts[static_cast<std::size_t>(isolated[static_cast<std::size_t>(pad + i)])] = Part::B;
      }
      for (int i = j; i < pair_count; ++i) cert.extra_edges.push_back(pairs[static_cast<std::size_t>(i)]);
      found = std::move(cert);
      return true;
    }
    return false;
  }
};

}  // namespace

std::optional<EmbeddingCertificate> embeds_in_host(const Graph& g, const ConstructionParams& host) {
  host.validate();
  if (g.order() != host.n) return std::nullopt;
  const int a = static_cast<int>(host.part_a());
  const int b = static_cast<int>(host.part_b());
  const int extras = extra_edges(host.variant);
  EmbedSearch search{g, a, b, extras, std::max(b - 1, extras > 0 ? 1 : 0), {}, {}, {}, host};
  if (!search.run()) return std::nullopt;
  return search.found;
}

bool certificate_valid(const Graph& g, const EmbeddingCertificate& cert, std::string* why) {
  auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  if (!cert.host.valid()) return fail("host parameters are invalid");
  if (g.order() != cert.host.n) return fail("graph order differs from host order");
  if (static_cast<int>(cert.parts.size()) != g.order()) return fail("part list length differs from graph order");

  std::int64_t sizes[3] = {0, 0, 0};
  for (Part p : cert.parts) ++sizes[static_cast<int>(p)];
  if (sizes[0] != cert.host.part_a() || sizes[1] != cert.host.part_b() || sizes[2] != cert.host.part_c()) {
    return fail("part sizes do not match the host");
  }
  if (static_cast<int>(cert.extra_edges.size()) > extra_edges(cert.host.variant)) {
    return fail("more extra C-edges than the variant provides");
  }

  std::vector<Edge> listed;
  std::vector<int> used(static_cast<std::size_t>(g.order()), 0);
  for (Edge e : cert.extra_edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || e.u == e.v) {
      return fail("extra edge has an invalid endpoint");
    }
    if (cert.parts[static_cast<std::size_t>(e.u)] != Part::C || cert.parts[static_cast<std::size_t>(e.v)] != Part::C) {
      return fail("extra edge leaves C");
    }
    if (++used[static_cast<std::size_t>(e.u)] > 1 || ++used[static_cast<std::size_t>(e.v)] > 1) {
      return fail("extra edges are not independent");
    }
    listed.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(listed.begin(), listed.end());

  std::vector<Edge> inside_c;
  for (const Edge& e : g.edges()) {
    const Part pu = cert.parts[static_cast<std::size_t>(e.u)];
    const Part pv = cert.parts[static_cast<std::size_t>(e.v)];
    if ((pu == Part::B && pv == Part::C) || (pu == Part::C && pv == Part::B)) {
      return fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " joins B and C");
    }
    if (pu == Part::C && pv == Part::C) inside_c.push_back(e);
  }
  for (const Edge& e : inside_c) {
    if (!std::binary_search(listed.begin(), listed.end(), e)) {
      return fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " inside C is not an extra edge");
    }
  }
  return true;
}

std::string describe(const EmbeddingCertificate& cert) {
  std::ostringstream out;
  const char* names[3] = {"A", "B", "C"};
  for (int p = 0; p < 3; ++p) {
    if (p > 0) out << ';';
    out << names[p] << ':';
    bool first = true;
    for (std::size_t v = 0; v < cert.parts.size(); ++v) {
      if (static_cast<int>(cert.parts[v]) != p) continue;
      if (!first) out << ',';
      out << v;
      first = false;
    }
  }
  if (!cert.extra_edges.empty()) {
    out << ";extra:";
    for (std::size_t i = 0; i < cert.extra_edges.size(); ++i) {
      if (i > 0) out << ',';
      out << cert.extra_edges[i].u << '-' << cert.extra_edges[i].v;
    }
  }
  return out.str();
}

}  // namespace linfor
