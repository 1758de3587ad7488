#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "normcolour/colouring.hpp"
#include "normcolour/error.hpp"
#include "normcolour/graph.hpp"

namespace normcolour {

/// Preference ranks over norms; higher is preferred, equal ranks tie.
struct WeakOrdering {
  std::unordered_map<NormId, std::int64_t> rank;

  std::int64_t rank_of(const NormId& id) const {
    auto it = rank.find(id);
    if (it == rank.end()) throw Error(ErrorKind::InvalidArgument, "weak ordering has no rank for norm '" + id.str() + "'");
    return it->second;
  }

  /// Ranks laid out by vertex index; throws if a norm of g is missing.
  std::vector<std::int64_t> by_vertex(const ConflictGraph& g) const {
    std::vector<std::int64_t> out(g.size());
    for (VertexIndex v = 0; v < g.size(); ++v) out[v] = rank_of(g.id(v));
    return out;
  }

  friend bool operator==(const WeakOrdering&, const WeakOrdering&) = default;
};

enum class ScoreMode {
  Gross,  // count wins only
  Net,    // wins minus losses
};

enum class PolicyKind { LexPosterior, LexSuperior, LexSpecialis, WeakOrder, MaxColourClass, Custom };

/// Which declaration time wins under lex posterior. The heuristic as
/// formulated counts a win when T_v < T_w, i.e. the earlier norm wins; the
/// policy's usual reading favours the more recent norm. Both are offered.
enum class TimeDirection { EarlierWins, LaterWins };

/// h(G, phi, c): any scoring of a colour class.
using Heuristic = std::function<double(const ConflictGraph&, const Colouring&, ColourId)>;

struct Policy {
  PolicyKind kind = PolicyKind::MaxColourClass;
  ScoreMode mode = ScoreMode::Net;
  WeakOrdering ordering;                                  // WeakOrder
  TimeDirection time_direction = TimeDirection::EarlierWins;  // LexPosterior
  Heuristic custom;                                       // Custom
  std::string custom_name = "custom";

  static Policy lex_posterior(ScoreMode mode = ScoreMode::Net,
                              TimeDirection direction = TimeDirection::EarlierWins) {
    Policy p;
    p.kind = PolicyKind::LexPosterior;
    p.mode = mode;
    p.time_direction = direction;
    return p;
  }
  static Policy lex_superior(ScoreMode mode = ScoreMode::Net) {
    Policy p;
    p.kind = PolicyKind::LexSuperior;
    p.mode = mode;
    return p;
  }
  static Policy lex_specialis(ScoreMode mode = ScoreMode::Net) {
    Policy p;
    p.kind = PolicyKind::LexSpecialis;
    p.mode = mode;
    return p;
  }
  static Policy weak_order(WeakOrdering ordering, ScoreMode mode = ScoreMode::Net) {
    Policy p;
    p.kind = PolicyKind::WeakOrder;
    p.mode = mode;
    p.ordering = std::move(ordering);
    return p;
  }
  static Policy max_colour_class() { return Policy{}; }
  static Policy from_heuristic(Heuristic h, std::string name = "custom") {
    Policy p;
    p.kind = PolicyKind::Custom;
    p.custom = std::move(h);
    p.custom_name = std::move(name);
    return p;
  }

  std::string name() const {
    switch (kind) {
      case PolicyKind::LexPosterior: return "lex-posterior";
      case PolicyKind::LexSuperior: return "lex-superior";
      case PolicyKind::LexSpecialis: return "lex-specialis";
      case PolicyKind::WeakOrder: return "weak-order";
      case PolicyKind::MaxColourClass: return "max-class";
      case PolicyKind::Custom: return custom_name;
    }
    return "unknown";
  }
};

/// Rank map derived from norm metadata: negated declaration time for lex
/// posterior (earlier = higher, unless LaterWins), authority rank for lex
/// superior.
inline WeakOrdering ordering_from_metadata(const ConflictGraph& g, PolicyKind kind,
                                           TimeDirection direction = TimeDirection::EarlierWins) {
  WeakOrdering w;
  for (const Norm& n : g.norms()) {
    switch (kind) {
      case PolicyKind::LexPosterior:
        w.rank[n.id] = direction == TimeDirection::EarlierWins ? -n.declared_at : n.declared_at;
        break;
      case PolicyKind::LexSuperior:
        w.rank[n.id] = n.authority_rank;
        break;
      default:
        throw Error(ErrorKind::InvalidArgument, "metadata orderings exist only for lex-posterior and lex-superior");
    }
  }
  return w;
}

namespace detail {

// Sign of the strict preference between two vertices: +1 if a is preferred,
// -1 if b is, 0 on ties or incomparability.
using Comparator = std::function<int(VertexIndex, VertexIndex)>;

inline Comparator rank_comparator(std::vector<std::int64_t> ranks) {
  return [ranks = std::move(ranks)](VertexIndex a, VertexIndex b) {
    return ranks[a] > ranks[b] ? 1 : (ranks[a] < ranks[b] ? -1 : 0);
  };
}

inline bool strict_subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Comparator comparator_for(const ConflictGraph& g, const Policy& p) {
  switch (p.kind) {
    case PolicyKind::LexPosterior:
    case PolicyKind::LexSuperior:
      return rank_comparator(ordering_from_metadata(g, p.kind, p.time_direction).by_vertex(g));
    case PolicyKind::WeakOrder:
      return rank_comparator(p.ordering.by_vertex(g));
    case PolicyKind::LexSpecialis:
      return [&g](VertexIndex a, VertexIndex b) {
        const auto& ant_a = g.norm(a).antecedents;
        const auto& ant_b = g.norm(b).antecedents;
        if (strict_subset(ant_a, ant_b)) return 1;
        if (strict_subset(ant_b, ant_a)) return -1;
        return 0;
      };
    default:
      return {};
  }
}

}  // namespace detail

/// Scores of every colour class under p, indexed by colour.
inline std::vector<double> score_colours(const ConflictGraph& g, const Colouring& phi, const Policy& p) {
  std::vector<double> scores(phi.num_colours, 0.0);
  if (p.kind == PolicyKind::MaxColourClass) {
    for (VertexIndex v = 0; v < g.size(); ++v) scores.at(phi[v]) += 1.0;
    return scores;
  }
  if (p.kind == PolicyKind::Custom) {
    if (!p.custom) throw Error(ErrorKind::InvalidArgument, "custom policy without a heuristic");
    for (ColourId c = 0; c < phi.num_colours; ++c) scores[c] = p.custom(g, phi, c);
    return scores;
  }

  const auto prefer = detail::comparator_for(g, p);
  for (VertexIndex v = 0; v < g.size(); ++v) {
    std::int64_t net = 0;
    for (VertexIndex w : g.adjacent(v)) {
      const int s = prefer(v, w);
      if (s > 0 || p.mode == ScoreMode::Net) net += s;
    }
    scores.at(phi[v]) += static_cast<double>(net);
  }
  return scores;
}

/// h(G, phi, c) for the built-in policies, or the user heuristic.
inline double score_colour(const ConflictGraph& g, const Colouring& phi, ColourId c, const Policy& p) {
  if (c >= phi.num_colours)
    throw Error(ErrorKind::UnknownColour, "colour " + std::to_string(c) + " is not used by a " +
                                              std::to_string(phi.num_colours) + "-colouring");
  if (p.kind == PolicyKind::Custom) {
    if (!p.custom) throw Error(ErrorKind::InvalidArgument, "custom policy without a heuristic");
    return p.custom(g, phi, c);
  }
  return score_colours(g, phi, p)[c];
}

/// Colours in descending score order; equal scores keep ascending colour id.
inline std::vector<ColourId> rank_colours(std::span<const double> scores) {
  std::vector<ColourId> order(scores.size());
  std::iota(order.begin(), order.end(), ColourId{0});
  std::stable_sort(order.begin(), order.end(), [&](ColourId a, ColourId b) { return scores[a] > scores[b]; });
  return order;
}

inline std::vector<ColourId> rank_colours(const ConflictGraph& g, const Colouring& phi, const Policy& p) {
  const auto scores = score_colours(g, phi, p);
  return rank_colours(std::span<const double>(scores));
}

/// Net preference score of a set of admitted norms: +1 for every conflict
/// an admitted norm wins, -1 for every conflict it loses. Over the whole
/// vertex set the wins and losses cancel to 0.
inline std::int64_t score_admitted_set(const ConflictGraph& g, std::span<const VertexIndex> admitted,
                                       const WeakOrdering& w) {
  const auto ranks = w.by_vertex(g);
  std::int64_t total = 0;
  for (VertexIndex v : admitted) {
    for (VertexIndex u : g.adjacent(v)) {
      if (ranks[v] > ranks[u]) ++total;
      else if (ranks[v] < ranks[u]) --total;
    }
  }
  return total;
}

inline std::int64_t score_admitted_set(const ConflictGraph& g, std::span<const NormId> admitted,
                                       const WeakOrdering& w) {
  std::vector<VertexIndex> idx;
  idx.reserve(admitted.size());
  for (const auto& id : admitted) idx.push_back(g.index_of(id));
  return score_admitted_set(g, std::span<const VertexIndex>(idx), w);
}

}  // namespace normcolour
