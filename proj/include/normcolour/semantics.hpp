#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "normcolour/error.hpp"
#include "normcolour/graph.hpp"

// Brute-force argumentation semantics over the symmetric attack relation of a
// conflict graph, plus the exhaustive searches used as test oracles and the
// random-drop baseline. Everything here follows the textbook definitions
// directly rather than the shortcuts that hold for symmetric frameworks, so
// the shortcuts can be checked against it.

namespace normcolour {

inline constexpr std::size_t kMaxAdmissibleSearchSize = 24;
inline constexpr std::size_t kMaxChromaticSearchSize = 16;

namespace detail {

inline std::vector<char> membership(const ConflictGraph& g, std::span<const VertexIndex> s) {
  std::vector<char> in(g.size(), 0);
  for (VertexIndex v : s) {
    if (v >= g.size()) throw Error(ErrorKind::UnknownNormId, "vertex index out of range");
    in[v] = 1;
  }
  return in;
}

// Some member of s attacks b.
inline bool attacked_by(const ConflictGraph& g, const std::vector<char>& in, VertexIndex b) {
  for (VertexIndex c : g.adjacent(b))
    if (in[c]) return true;
  return false;
}

// Every attacker of a is attacked by s.
inline bool acceptable(const ConflictGraph& g, const std::vector<char>& in, VertexIndex a) {
  for (VertexIndex b : g.adjacent(a))
    if (!attacked_by(g, in, b)) return false;
  return true;
}

inline bool conflict_free(const ConflictGraph& g, const std::vector<char>& in) {
  for (auto [a, b] : g.edges())
    if (in[a] && in[b]) return false;
  return true;
}

inline bool admissible(const ConflictGraph& g, const std::vector<char>& in) {
  if (!conflict_free(g, in)) return false;
  for (VertexIndex a = 0; a < g.size(); ++a)
    if (in[a] && !acceptable(g, in, a)) return false;
  return true;
}

inline bool complete(const ConflictGraph& g, const std::vector<char>& in) {
  if (!admissible(g, in)) return false;
  for (VertexIndex a = 0; a < g.size(); ++a)
    if (!in[a] && acceptable(g, in, a)) return false;
  return true;
}

}  // namespace detail

inline bool is_conflict_free(const ConflictGraph& g, std::span<const VertexIndex> s) {
  return detail::conflict_free(g, detail::membership(g, s));
}
inline bool is_admissible(const ConflictGraph& g, std::span<const VertexIndex> s) {
  return detail::admissible(g, detail::membership(g, s));
}
inline bool is_complete_extension(const ConflictGraph& g, std::span<const VertexIndex> s) {
  return detail::complete(g, detail::membership(g, s));
}

inline bool is_conflict_free(const ConflictGraph& g, std::span<const NormId> s) {
  const auto idx = to_indices(g, s);
  return is_conflict_free(g, std::span<const VertexIndex>(idx));
}
inline bool is_admissible(const ConflictGraph& g, std::span<const NormId> s) {
  const auto idx = to_indices(g, s);
  return is_admissible(g, std::span<const VertexIndex>(idx));
}
inline bool is_complete_extension(const ConflictGraph& g, std::span<const NormId> s) {
  const auto idx = to_indices(g, s);
  return is_complete_extension(g, std::span<const VertexIndex>(idx));
}

struct ExtensionReport {
  std::vector<NormId> set;
  bool conflict_free = false;
  bool admissible = false;
  bool complete = false;
};

inline ExtensionReport check_extension(const ConflictGraph& g, std::span<const NormId> s) {
  const auto in = detail::membership(g, to_indices(g, s));
  return ExtensionReport{{s.begin(), s.end()}, detail::conflict_free(g, in), detail::admissible(g, in),
                         detail::complete(g, in)};
}

namespace detail {

// Branch and bound over bitmasks. Vertices are visited in ascending id order
// and the include branch goes first, so the first maximum set found is the
// lexicographically smallest one; later sets only replace it when strictly
// larger.
class MaxIndependentSearch {
 public:
  explicit MaxIndependentSearch(const ConflictGraph& g) : n_(g.size()), order_(g.size()), nbr_(g.size(), 0) {
    std::iota(order_.begin(), order_.end(), VertexIndex{0});
    std::sort(order_.begin(), order_.end(), [&](VertexIndex a, VertexIndex b) { return g.id(a) < g.id(b); });
    std::vector<std::size_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = i;
    for (auto [a, b] : g.edges()) {
      nbr_[pos[a]] |= std::uint32_t{1} << pos[b];
      nbr_[pos[b]] |= std::uint32_t{1} << pos[a];
    }
  }

  std::vector<VertexIndex> solve() {
    const std::uint32_t all = n_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_) - 1;
    search(0, all, 0);
    std::vector<VertexIndex> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (best_ >> i & 1u) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void search(std::uint32_t chosen, std::uint32_t candidates, int size) {
    if (candidates == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + std::popcount(candidates) <= best_size_) return;
    const int i = std::countr_zero(candidates);
    const std::uint32_t bit = std::uint32_t{1} << i;
    search(chosen | bit, candidates & ~bit & ~nbr_[i], size + 1);
    search(chosen, candidates & ~bit, size);
  }

  std::size_t n_;
  std::vector<VertexIndex> order_;
  std::vector<std::uint32_t> nbr_;
  std::uint32_t best_ = 0;
  int best_size_ = -1;
};

// Backtracking k-colouring with the usual symmetry break: a vertex may open
// at most one new colour beyond those already used.
class ColouringSearch {
 public:
  explicit ColouringSearch(const ConflictGraph& g) : g_(g), order_(g.size()), colour_(g.size(), kNone) {
    std::iota(order_.begin(), order_.end(), VertexIndex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](VertexIndex a, VertexIndex b) { return g.degree(a) > g.degree(b); });
  }

  bool colourable(std::size_t k) {
    k_ = k;
    std::fill(colour_.begin(), colour_.end(), kNone);
    stop_at_first_ = true;
    found_ = false;
    place(0, 0);
    return found_;
  }

  // Largest colour class over every proper k-colouring (k colours all used
  // or not); -1 if none exists.
  int largest_class(std::size_t k) {
    k_ = k;
    std::fill(colour_.begin(), colour_.end(), kNone);
    stop_at_first_ = false;
    found_ = false;
    largest_ = -1;
    place(0, 0);
    return largest_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void place(std::size_t depth, std::size_t used) {
    if (found_ && stop_at_first_) return;
    if (depth == order_.size()) {
      found_ = true;
      std::vector<int> counts(k_, 0);
      for (std::size_t c : colour_) ++counts[c];
      largest_ = std::max(largest_, *std::max_element(counts.begin(), counts.end()));
      return;
    }
    const VertexIndex v = order_[depth];
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      bool clash = false;
      for (VertexIndex w : g_.adjacent(v))
        if (colour_[w] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colour_[v] = c;
      place(depth + 1, std::max(used, c + 1));
      colour_[v] = kNone;
      if (found_ && stop_at_first_) return;
    }
  }

  const ConflictGraph& g_;
  std::vector<VertexIndex> order_;
  std::vector<std::size_t> colour_;
  std::size_t k_ = 0;
  bool stop_at_first_ = true;
  bool found_ = false;
  int largest_ = -1;
};

}  // namespace detail

/// Maximum-cardinality admissible set, i.e. a maximum independent set of the
/// conflict graph. Among equally large sets the one whose sorted id list is
/// lexicographically smallest is returned. Result is in insertion order.
inline std::vector<VertexIndex> max_cardinality_admissible(const ConflictGraph& g) {
  if (g.size() > kMaxAdmissibleSearchSize)
    throw Error(ErrorKind::TooLarge, "exhaustive admissible search is limited to " +
                                         std::to_string(kMaxAdmissibleSearchSize) + " norms");
  return detail::MaxIndependentSearch(g).solve();
}

inline std::size_t chromatic_number(const ConflictGraph& g) {
  if (g.size() > kMaxChromaticSearchSize)
    throw Error(ErrorKind::TooLarge, "exact colouring is limited to " + std::to_string(kMaxChromaticSearchSize) +
                                         " norms");
  if (g.empty()) return 0;
  detail::ColouringSearch search(g);
  std::size_t k = 1;
  while (!search.colourable(k)) ++k;
  return k;
}

/// Largest colour class found in any proper colouring that uses
/// chromatic_number(g) colours.
inline std::size_t largest_class_in_optimal_colourings(const ConflictGraph& g) {
  const std::size_t k = chromatic_number(g);
  if (k == 0) return 0;
  return static_cast<std::size_t>(detail::ColouringSearch(g).largest_class(k));
}

/// Baseline that deletes a random endpoint of a random remaining conflict
/// until no conflict is left; returns the surviving vertices in insertion
/// order.
template <class Rng>
std::vector<VertexIndex> random_drop(const ConflictGraph& g, Rng& rng) {
  std::vector<char> alive(g.size(), 1);
  std::vector<std::pair<VertexIndex, VertexIndex>> remaining = g.edges();
  while (!remaining.empty()) {
    std::uniform_int_distribution<std::size_t> pick_edge(0, remaining.size() - 1);
    const auto [a, b] = remaining[pick_edge(rng)];
    std::bernoulli_distribution first(0.5);
    const VertexIndex dropped = first(rng) ? a : b;
    alive[dropped] = 0;
    std::erase_if(remaining, [&](const auto& e) { return e.first == dropped || e.second == dropped; });
  }
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < g.size(); ++v)
    if (alive[v]) out.push_back(v);
  return out;
}

}  // namespace normcolour
