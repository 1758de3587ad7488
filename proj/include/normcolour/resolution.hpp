#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normcolour/colouring.hpp"
#include "normcolour/graph.hpp"
#include "normcolour/policies.hpp"

namespace normcolour {

enum class Algorithm { Resolve, ResolveComplete, Curtail, CurtailComplete };

constexpr std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Resolve: return "resolve";
    case Algorithm::ResolveComplete: return "resolve-complete";
    case Algorithm::Curtail: return "curtail";
    case Algorithm::CurtailComplete: return "curtail-complete";
  }
  return "unknown";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Resolve, Algorithm::ResolveComplete, Algorithm::Curtail, Algorithm::CurtailComplete})
    if (algorithm_name(a) == name) return a;
  return std::nullopt;
}

constexpr bool is_curtailing(Algorithm a) { return a == Algorithm::Curtail || a == Algorithm::CurtailComplete; }

/// An admitted norm together with the earlier-admitted conflicting norms it
/// yields to. An empty curtailed_wrt means unconditional admission.
struct CurtailedNorm {
  NormId norm;
  std::vector<NormId> curtailed_wrt;  // admission order
  std::size_t iteration = 0;          // position of its colour in colour_order

  friend bool operator==(const CurtailedNorm&, const CurtailedNorm&) = default;
};

struct Resolution {
  Algorithm algorithm = Algorithm::Resolve;
  std::string policy;
  std::vector<CurtailedNorm> entries;  // admission order
  Colouring colouring_used;            // output of the colouring step
  Colouring final_colouring;           // after any completion recolouring
  std::vector<ColourId> colour_order;  // descending heuristic value

  std::vector<NormId> admitted() const {
    std::vector<NormId> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.norm);
    return out;
  }

  std::vector<NormId> admitted_unconditionally() const {
    std::vector<NormId> out;
    for (const auto& e : entries)
      if (e.curtailed_wrt.empty()) out.push_back(e.norm);
    return out;
  }

  std::vector<NormId> admitted_in_iteration(std::size_t iteration) const {
    std::vector<NormId> out;
    for (const auto& e : entries)
      if (e.iteration == iteration) out.push_back(e.norm);
    return out;
  }

  std::size_t curtailment_count() const {
    std::size_t total = 0;
    for (const auto& e : entries) total += e.curtailed_wrt.size();
    return total;
  }

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

namespace detail {

constexpr std::size_t kNotAdmitted = std::numeric_limits<std::size_t>::max();

inline bool has_neighbour_coloured(const ConflictGraph& g, const Colouring& phi, VertexIndex v, ColourId c) {
  for (VertexIndex w : g.adjacent(v))
    if (phi[w] == c) return true;
  return false;
}

// Sequentially moves every eligible vertex into colour c, sweeping in
// insertion order. Only vertices with admitted_at == kNotAdmitted are
// considered.
inline void complete_class(const ConflictGraph& g, Colouring& phi, ColourId c,
                           const std::vector<std::size_t>& admitted_at) {
  for (VertexIndex v = 0; v < g.size(); ++v) {
    if (admitted_at[v] != kNotAdmitted || phi[v] == c) continue;
    if (!has_neighbour_coloured(g, phi, v, c)) phi.assignment[v] = c;
  }
}

inline Resolution run(const ConflictGraph& g, const Policy& p, Colouring phi, Algorithm algorithm) {
  if (!is_valid_colouring(g, phi)) throw Error(ErrorKind::InvalidArgument, "colouring is not proper");

  Resolution r;
  r.algorithm = algorithm;
  r.policy = p.name();
  r.colouring_used = phi;
  r.colour_order = rank_colours(g, phi, p);

  const bool completing = algorithm == Algorithm::ResolveComplete || algorithm == Algorithm::CurtailComplete;
  const std::size_t iterations = is_curtailing(algorithm) ? r.colour_order.size()
                                                          : std::min<std::size_t>(1, r.colour_order.size());

  std::vector<std::size_t> admitted_at(g.size(), kNotAdmitted);
  std::size_t next_slot = 0;
  for (std::size_t i = 0; i < iterations; ++i) {
    const ColourId c = r.colour_order[i];
    if (completing) complete_class(g, phi, c, admitted_at);

    std::vector<VertexIndex> members;
    for (VertexIndex v = 0; v < g.size(); ++v)
      if (phi[v] == c && admitted_at[v] == kNotAdmitted) members.push_back(v);

    for (VertexIndex v : members) {
      std::vector<VertexIndex> earlier;
      for (VertexIndex w : g.adjacent(v))
        if (admitted_at[w] != kNotAdmitted) earlier.push_back(w);
      std::sort(earlier.begin(), earlier.end(),
                [&](VertexIndex a, VertexIndex b) { return admitted_at[a] < admitted_at[b]; });

      CurtailedNorm entry{g.id(v), {}, i};
      for (VertexIndex w : earlier) entry.curtailed_wrt.push_back(g.id(w));
      r.entries.push_back(std::move(entry));
    }
    for (VertexIndex v : members) admitted_at[v] = next_slot++;
  }

  r.final_colouring = std::move(phi);
  return r;
}

}  // namespace detail

/// Admits the single best colour class.
inline Resolution colour_resolve(const ConflictGraph& g, const Policy& p, const Colouring& phi) {
  return detail::run(g, p, phi, Algorithm::Resolve);
}
inline Resolution colour_resolve(const ConflictGraph& g, const Policy& p) { return colour_resolve(g, p, dsatur(g)); }

/// Admits the best colour class after sweeping every vertex with no
/// neighbour in that class into it; the result is a complete extension.
inline Resolution colour_resolve_complete(const ConflictGraph& g, const Policy& p, const Colouring& phi) {
  return detail::run(g, p, phi, Algorithm::ResolveComplete);
}
inline Resolution colour_resolve_complete(const ConflictGraph& g, const Policy& p) {
  return colour_resolve_complete(g, p, dsatur(g));
}

/// Admits every colour class in descending heuristic order; each norm is
/// curtailed with respect to its already-admitted conflicting neighbours.
inline Resolution colour_curtail(const ConflictGraph& g, const Policy& p, const Colouring& phi) {
  return detail::run(g, p, phi, Algorithm::Curtail);
}
inline Resolution colour_curtail(const ConflictGraph& g, const Policy& p) { return colour_curtail(g, p, dsatur(g)); }

/// colour_curtail, but each class is first completed with the
/// not-yet-admitted vertices that have no neighbour of that colour.
inline Resolution colour_curtail_complete(const ConflictGraph& g, const Policy& p, const Colouring& phi) {
  return detail::run(g, p, phi, Algorithm::CurtailComplete);
}
inline Resolution colour_curtail_complete(const ConflictGraph& g, const Policy& p) {
  return colour_curtail_complete(g, p, dsatur(g));
}

inline Resolution resolve(const ConflictGraph& g, const Policy& p, const Colouring& phi, Algorithm algorithm) {
  return detail::run(g, p, phi, algorithm);
}
inline Resolution resolve(const ConflictGraph& g, const Policy& p, Algorithm algorithm) {
  return detail::run(g, p, dsatur(g), algorithm);
}

}  // namespace normcolour
