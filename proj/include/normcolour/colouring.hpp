#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "normcolour/error.hpp"
#include "normcolour/graph.hpp"

namespace normcolour {

using ColourId = std::size_t;

/// Vertex colouring indexed by VertexIndex. Colourings produced by this
/// library use exactly the colours 0..num_colours-1.
struct Colouring {
  std::vector<ColourId> assignment;
  std::size_t num_colours = 0;

  ColourId operator[](VertexIndex v) const { return assignment[v]; }

  friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// True iff phi covers g, every colour is below num_colours and no edge is
/// monochromatic.
inline bool is_valid_colouring(const ConflictGraph& g, const Colouring& phi) {
  if (phi.assignment.size() != g.size())
    throw Error(ErrorKind::IncompleteColouring, "colouring covers " + std::to_string(phi.assignment.size()) +
                                                    " vertices, graph has " + std::to_string(g.size()));
  for (ColourId c : phi.assignment)
    if (c >= phi.num_colours) return false;
  for (auto [a, b] : g.edges())
    if (phi[a] == phi[b]) return false;
  return true;
}

/// Vertices of each colour, in insertion order; index = colour.
inline std::vector<std::vector<VertexIndex>> colour_classes(const ConflictGraph& g, const Colouring& phi) {
  std::vector<std::vector<VertexIndex>> classes(phi.num_colours);
  for (VertexIndex v = 0; v < g.size(); ++v) classes.at(phi[v]).push_back(v);
  return classes;
}

namespace detail {

// Tracks which colours already appear around each vertex.
class NeighbourColours {
 public:
  NeighbourColours(std::size_t n, std::size_t colour_bound) : width_(colour_bound), seen_(n * colour_bound, 0) {}

  bool seen(VertexIndex v, ColourId c) const { return seen_[v * width_ + c] != 0; }

  // Returns true if c was new for v.
  bool mark(VertexIndex v, ColourId c) {
    auto& slot = seen_[v * width_ + c];
    if (slot) return false;
    slot = 1;
    return true;
  }

  ColourId lowest_free(VertexIndex v) const {
    ColourId c = 0;
    while (seen(v, c)) ++c;
    return c;
  }

 private:
  std::size_t width_;
  std::vector<char> seen_;
};

}  // namespace detail

/// DSatur colouring (Brélaz).
///
/// Repeatedly picks the uncoloured vertex with the most distinct colours
/// among its neighbours; ties go to the higher degree, then to the earlier
/// insertion position. The chosen vertex takes the lowest colour index not
/// used by a neighbour, opening a new colour only when every existing one
/// is blocked.
inline Colouring dsatur(const ConflictGraph& g) {
  const std::size_t n = g.size();
  Colouring phi{std::vector<ColourId>(n, 0), 0};
  if (n == 0) return phi;

  const std::size_t bound = g.max_degree() + 2;
  detail::NeighbourColours around(n, bound);
  std::vector<std::size_t> saturation(n, 0);
  std::vector<char> coloured(n, 0);

  for (std::size_t step = 0; step < n; ++step) {
    VertexIndex pick = n;
    for (VertexIndex v = 0; v < n; ++v) {
      if (coloured[v]) continue;
      if (pick == n || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick)))
        pick = v;
    }

    const ColourId c = around.lowest_free(pick);
    phi.assignment[pick] = c;
    phi.num_colours = std::max(phi.num_colours, c + 1);
    coloured[pick] = 1;
    for (VertexIndex w : g.adjacent(pick))
      if (!coloured[w] && around.mark(w, c)) ++saturation[w];
  }
  return phi;
}

/// Sequential greedy colouring along an explicit vertex order.
inline Colouring greedy_colouring(const ConflictGraph& g, std::span<const VertexIndex> order) {
  const std::size_t n = g.size();
  if (order.size() != n) throw Error(ErrorKind::InvalidArgument, "vertex order must list every vertex once");
  std::vector<char> placed(n, 0);
  for (VertexIndex v : order) {
    if (v >= n || placed[v]) throw Error(ErrorKind::InvalidArgument, "vertex order must list every vertex once");
    placed[v] = 1;
  }

  Colouring phi{std::vector<ColourId>(n, 0), 0};
  detail::NeighbourColours around(n, g.max_degree() + 2);
  for (VertexIndex v : order) {
    const ColourId c = around.lowest_free(v);
    phi.assignment[v] = c;
    phi.num_colours = std::max(phi.num_colours, c + 1);
    for (VertexIndex w : g.adjacent(v)) around.mark(w, c);
  }
  return phi;
}

}  // namespace normcolour
