#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "normcolour/error.hpp"

namespace normcolour {

/// Position of a norm in its graph's insertion order.
using VertexIndex = std::size_t;

/// Opaque, non-empty identifier of a norm.
class NormId {
 public:
  NormId() = default;
  explicit NormId(std::string value) : value_(std::move(value)) {}
  explicit NormId(const char* value) : value_(value) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend auto operator<=>(const NormId&, const NormId&) = default;
  friend bool operator==(const NormId&, const NormId&) = default;

 private:
  std::string value_;
};

struct Norm {
  NormId id;
  std::string label{};
  std::int64_t declared_at = 0;
  std::int64_t authority_rank = 0;  // higher = stronger authority
  std::set<std::string> antecedents{};

  friend bool operator==(const Norm&, const Norm&) = default;
};

using Conflict = std::pair<NormId, NormId>;

/// Undirected conflict graph over a fixed list of norms.
///
/// Immutable once built. Vertices are addressed by their index in the norm
/// list, adjacency lists are sorted by index, and the edge list holds each
/// undirected edge once as (lower index, higher index) in lexicographic order.
class ConflictGraph {
 public:
  ConflictGraph() = default;

  std::size_t size() const noexcept { return norms_.size(); }
  bool empty() const noexcept { return norms_.empty(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<Norm>& norms() const noexcept { return norms_; }
  const Norm& norm(VertexIndex v) const { return norms_.at(v); }
  const NormId& id(VertexIndex v) const { return norms_.at(v).id; }

  const std::vector<std::pair<VertexIndex, VertexIndex>>& edges() const noexcept {
    return edges_;
  }

  std::span<const VertexIndex> adjacent(VertexIndex v) const { return adjacency_.at(v); }
  std::size_t degree(VertexIndex v) const { return adjacency_.at(v).size(); }

  bool has_edge(VertexIndex a, VertexIndex b) const {
    const auto& adj = adjacency_.at(a);
    return std::binary_search(adj.begin(), adj.end(), b);
  }

  bool contains(const NormId& id) const { return index_.find(id.str()) != index_.end(); }

  VertexIndex index_of(const NormId& id) const {
    auto it = index_.find(id.str());
    if (it == index_.end()) throw Error(ErrorKind::UnknownNormId, "no norm with id '" + id.str() + "'");
    return it->second;
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& adj : adjacency_) best = std::max(best, adj.size());
    return best;
  }

  friend bool operator==(const ConflictGraph& a, const ConflictGraph& b) {
    return a.norms_ == b.norms_ && a.edges_ == b.edges_;
  }

  friend ConflictGraph build_graph(std::vector<Norm> norms, std::span<const Conflict> conflicts);
  friend ConflictGraph build_graph_indexed(std::vector<Norm> norms,
                                           std::span<const std::pair<VertexIndex, VertexIndex>> conflicts);

 private:
  void init_index() {
    index_.reserve(norms_.size());
    for (VertexIndex v = 0; v < norms_.size(); ++v) {
      const auto& id = norms_[v].id;
      if (id.empty()) throw Error(ErrorKind::SchemaError, "norm at position " + std::to_string(v) + " has an empty id");
      if (!index_.emplace(id.str(), v).second)
        throw Error(ErrorKind::DuplicateNormId, "norm id '" + id.str() + "' appears more than once");
    }
    adjacency_.assign(norms_.size(), {});
  }

  void add_edge(VertexIndex a, VertexIndex b) {
    if (a == b) throw Error(ErrorKind::SelfConflict, "norm '" + norms_[a].id.str() + "' cannot conflict with itself");
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }

  void finish_edges() {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [a, b] : edges_) {
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  }

  std::vector<Norm> norms_;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges_;
  std::vector<std::vector<VertexIndex>> adjacency_;
  std::unordered_map<std::string, VertexIndex> index_;
};

/// Builds a graph from norms and id pairs. Reversed and repeated pairs
/// collapse into a single undirected edge.
inline ConflictGraph build_graph(std::vector<Norm> norms, std::span<const Conflict> conflicts) {
  ConflictGraph g;
  g.norms_ = std::move(norms);
  g.init_index();
  g.edges_.reserve(conflicts.size());
  for (const auto& [a, b] : conflicts) g.add_edge(g.index_of(a), g.index_of(b));
  g.finish_edges();
  return g;
}

inline ConflictGraph build_graph(std::vector<Norm> norms, const std::vector<Conflict>& conflicts) {
  return build_graph(std::move(norms), std::span<const Conflict>(conflicts));
}

/// Same as build_graph but with conflicts given as vertex indices.
inline ConflictGraph build_graph_indexed(std::vector<Norm> norms,
                                         std::span<const std::pair<VertexIndex, VertexIndex>> conflicts) {
  ConflictGraph g;
  g.norms_ = std::move(norms);
  g.init_index();
  g.edges_.reserve(conflicts.size());
  for (auto [a, b] : conflicts) {
    if (a >= g.size() || b >= g.size())
      throw Error(ErrorKind::UnknownNormId, "vertex index out of range");
    g.add_edge(a, b);
  }
  g.finish_edges();
  return g;
}

inline ConflictGraph build_graph_indexed(std::vector<Norm> norms,
                                         const std::vector<std::pair<VertexIndex, VertexIndex>>& conflicts) {
  return build_graph_indexed(std::move(norms),
                             std::span<const std::pair<VertexIndex, VertexIndex>>(conflicts));
}

/// Norms with bare ids, handy for fixtures and generated instances.
inline std::vector<Norm> norms_from_ids(std::initializer_list<const char*> ids) {
  std::vector<Norm> out;
  for (const char* id : ids) out.push_back(Norm{.id = NormId(id)});
  return out;
}

inline std::vector<NormId> neighbours(const ConflictGraph& g, const NormId& v) {
  std::vector<NormId> out;
  for (VertexIndex w : g.adjacent(g.index_of(v))) out.push_back(g.id(w));
  return out;
}

inline std::size_t degree(const ConflictGraph& g, const NormId& v) { return g.degree(g.index_of(v)); }

inline std::vector<NormId> to_ids(const ConflictGraph& g, std::span<const VertexIndex> vertices) {
  std::vector<NormId> out;
  out.reserve(vertices.size());
  for (VertexIndex v : vertices) out.push_back(g.id(v));
  return out;
}

inline std::vector<VertexIndex> to_indices(const ConflictGraph& g, std::span<const NormId> ids) {
  std::vector<VertexIndex> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(g.index_of(id));
  return out;
}

}  // namespace normcolour

template <>
struct std::hash<normcolour::NormId> {
  std::size_t operator()(const normcolour::NormId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
