#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "normcolour/graph.hpp"

namespace normcolour::testing {

inline std::vector<Norm> numbered_norms(std::size_t n, const std::string& prefix = "v") {
  std::vector<Norm> norms;
  for (std::size_t i = 0; i < n; ++i) norms.push_back(Norm{.id = NormId(prefix + std::to_string(i))});
  return norms;
}

inline ConflictGraph from_edges(std::size_t n, const std::vector<std::pair<VertexIndex, VertexIndex>>& edges) {
  return build_graph_indexed(numbered_norms(n), edges);
}

inline ConflictGraph edgeless(std::size_t n) { return from_edges(n, {}); }

inline ConflictGraph complete(std::size_t n) {
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (VertexIndex a = 0; a < n; ++a)
    for (VertexIndex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return from_edges(n, edges);
}

inline ConflictGraph path(std::size_t n) {
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (VertexIndex a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return from_edges(n, edges);
}

inline ConflictGraph cycle(std::size_t n) {
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (VertexIndex a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
  return from_edges(n, edges);
}

/// Complete bipartite K_{a,b}; left side first.
inline ConflictGraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (VertexIndex i = 0; i < a; ++i)
    for (VertexIndex j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return from_edges(a + b, edges);
}

/// G(n, p) with vertices v0..v{n-1}.
template <class Rng>
ConflictGraph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexIndex, VertexIndex>> edges;
  for (VertexIndex a = 0; a < n; ++a)
    for (VertexIndex b = a + 1; b < n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return from_edges(n, edges);
}

/// Random graph with exactly m distinct undirected edges.
template <class Rng>
ConflictGraph random_graph_m(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<std::pair<VertexIndex, VertexIndex>> all;
  for (VertexIndex a = 0; a < n; ++a)
    for (VertexIndex b = a + 1; b < n; ++b) all.emplace_back(a, b);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(m, all.size()));
  return from_edges(n, all);
}

/// Ids as strings, convenient for EXPECT_EQ on admitted sets.
inline std::vector<std::string> names(const std::vector<NormId>& ids) {
  std::vector<std::string> out;
  for (const auto& id : ids) out.push_back(id.str());
  return out;
}

/// Triangle a,b,c plus a disjoint edge d-e.
inline ConflictGraph triangle_plus_edge() {
  return build_graph(norms_from_ids({"a", "b", "c", "d", "e"}),
                     std::vector<Conflict>{{NormId("a"), NormId("b")},
                                           {NormId("b"), NormId("c")},
                                           {NormId("a"), NormId("c")},
                                           {NormId("d"), NormId("e")}});
}

/// Six-vertex graph with chromatic number 3 whose only independent triple
/// cannot be a colour class of any 3-colouring: the triangle x,y,z with
/// p, q, r each attached to one side of it (the 3-sun).
inline ConflictGraph g6() {
  auto c = [](const char* a, const char* b) { return Conflict{NormId(a), NormId(b)}; };
  return build_graph(norms_from_ids({"x", "y", "z", "p", "q", "r"}),
                     std::vector<Conflict>{c("x", "y"), c("y", "z"), c("x", "z"), c("p", "x"), c("p", "y"),
                                           c("q", "y"), c("q", "z"), c("r", "x"), c("r", "z")});
}

}  // namespace normcolour::testing
