#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "normcolour/colouring.hpp"
#include "normcolour/error.hpp"
#include "normcolour/graph.hpp"
#include "normcolour/policies.hpp"
#include "normcolour/resolution.hpp"
#include "normcolour/semantics.hpp"

namespace normcolour::bench {

enum class BenchAlgorithm { Resolve, ResolveComplete, Curtail, CurtailComplete, RandomDrop, MaxAdmissible };

constexpr std::string_view bench_algorithm_name(BenchAlgorithm a) {
  switch (a) {
    case BenchAlgorithm::Resolve: return "resolve";
    case BenchAlgorithm::ResolveComplete: return "resolve-complete";
    case BenchAlgorithm::Curtail: return "curtail";
    case BenchAlgorithm::CurtailComplete: return "curtail-complete";
    case BenchAlgorithm::RandomDrop: return "random-drop";
    case BenchAlgorithm::MaxAdmissible: return "max-admissible";
  }
  return "unknown";
}

enum class Metric { AdmittedCount, ScoreSum, ScoreAvg };

constexpr std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::AdmittedCount: return "admitted_count";
    case Metric::ScoreSum: return "score_sum";
    case Metric::ScoreAvg: return "score_avg";
  }
  return "unknown";
}

// Curtailing algorithms admit every norm, so they report these instead.
inline constexpr std::string_view kUncurtailedCount = "uncurtailed_count";
inline constexpr std::string_view kCurtailmentCount = "curtailment_count";

struct BenchConfig {
  std::size_t n_norms = 16;
  std::size_t conflicts_min = 1;
  std::size_t conflicts_max = 120;
  std::size_t trials_per_point = 250;
  bool duplicate_directed_pairs = false;
  std::uint64_t seed = 0;
  std::vector<BenchAlgorithm> algorithms{BenchAlgorithm::Resolve, BenchAlgorithm::ResolveComplete};
  Policy policy = Policy::max_colour_class();
  Metric metric = Metric::AdmittedCount;
};

struct BenchRow {
  std::size_t num_conflicts = 0;
  std::size_t trial = 0;
  std::string algorithm;
  std::string policy;
  std::string metric;
  double value = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct SummaryRow {
  std::size_t num_conflicts = 0;
  std::string algorithm;
  std::string policy;
  std::string metric;
  double mean = 0.0;
  std::size_t count = 0;
};

inline std::size_t max_conflicts(std::size_t n_norms, bool duplicate_directed_pairs) {
  const std::size_t ordered = n_norms * (n_norms == 0 ? 0 : n_norms - 1);
  return duplicate_directed_pairs ? ordered : ordered / 2;
}

/// Norm ids n0..n{N-1}, zero padded so lexicographic order matches index order.
inline std::vector<Norm> bench_norms(std::size_t n) {
  const std::size_t width = n <= 1 ? 1 : std::to_string(n - 1).size();
  std::vector<Norm> norms;
  norms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    norms.push_back(Norm{.id = NormId("n" + std::string(width - digits.size(), '0') + digits)});
  }
  return norms;
}

/// Distinct ranks n-1..0 by norm index.
inline WeakOrdering fixed_weak_ordering(const std::vector<Norm>& norms) {
  WeakOrdering w;
  const auto n = static_cast<std::int64_t>(norms.size());
  for (std::int64_t i = 0; i < n; ++i) w.rank[norms[static_cast<std::size_t>(i)].id] = n - 1 - i;
  return w;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for one (point, trial) cell; every algorithm in the cell shares it.
inline std::uint64_t derive_seed(std::uint64_t master, std::size_t num_conflicts, std::size_t trial) {
  std::uint64_t s = splitmix64(master);
  s = splitmix64(s ^ static_cast<std::uint64_t>(num_conflicts));
  return splitmix64(s ^ (static_cast<std::uint64_t>(trial) << 32));
}

/// Uniformly samples n_conflicts distinct vertex pairs without self-loops.
/// With duplicate_directed_pairs the pairs are ordered, so (a,b) and (b,a)
/// may both be drawn and later collapse to one undirected edge.
template <class Rng>
std::vector<std::pair<VertexIndex, VertexIndex>> generate_random_conflicts(std::size_t n_norms,
                                                                           std::size_t n_conflicts,
                                                                           bool duplicate_directed_pairs,
                                                                           Rng& rng) {
  const std::size_t limit = max_conflicts(n_norms, duplicate_directed_pairs);
  if (n_conflicts > limit)
    throw Error(ErrorKind::TooManyConflicts, std::to_string(n_conflicts) + " conflicts requested, at most " +
                                                 std::to_string(limit) + " possible among " +
                                                 std::to_string(n_norms) + " norms");
  std::vector<std::pair<VertexIndex, VertexIndex>> candidates;
  candidates.reserve(limit);
  for (VertexIndex a = 0; a < n_norms; ++a)
    for (VertexIndex b = duplicate_directed_pairs ? 0 : a + 1; b < n_norms; ++b)
      if (a != b) candidates.emplace_back(a, b);

  std::vector<std::pair<VertexIndex, VertexIndex>> picked;
  picked.reserve(n_conflicts);
  std::sample(candidates.begin(), candidates.end(), std::back_inserter(picked), n_conflicts, rng);
  return picked;
}

inline void validate(const BenchConfig& cfg) {
  if (cfg.n_norms == 0) throw Error(ErrorKind::InvalidArgument, "benchmark needs at least one norm");
  if (cfg.conflicts_min > cfg.conflicts_max)
    throw Error(ErrorKind::InvalidArgument, "conflict range is empty");
  if (cfg.trials_per_point == 0) throw Error(ErrorKind::InvalidArgument, "trials_per_point must be positive");
  if (cfg.algorithms.empty()) throw Error(ErrorKind::InvalidArgument, "no algorithms configured");
  const std::size_t limit = max_conflicts(cfg.n_norms, cfg.duplicate_directed_pairs);
  if (cfg.conflicts_max > limit)
    throw Error(ErrorKind::TooManyConflicts, "conflict range exceeds " + std::to_string(limit));
}

namespace detail {

inline double metric_value(Metric metric, const ConflictGraph& g, const std::vector<VertexIndex>& admitted,
                           const WeakOrdering& scoring) {
  switch (metric) {
    case Metric::AdmittedCount:
      return static_cast<double>(admitted.size());
    case Metric::ScoreSum:
      return static_cast<double>(score_admitted_set(g, std::span<const VertexIndex>(admitted), scoring));
    case Metric::ScoreAvg:
      if (admitted.empty()) return 0.0;
      return static_cast<double>(score_admitted_set(g, std::span<const VertexIndex>(admitted), scoring)) /
             static_cast<double>(admitted.size());
  }
  return 0.0;
}

}  // namespace detail

/// Runs every configured algorithm on freshly generated graphs for each
/// conflict count and trial. Rows come out ordered by (num_conflicts, trial,
/// configured algorithm order).
inline std::vector<BenchRow> run_benchmark(const BenchConfig& cfg) {
  validate(cfg);
  const auto norms = bench_norms(cfg.n_norms);
  const auto scoring = fixed_weak_ordering(norms);
  const std::string policy_name = cfg.policy.name();

  std::vector<BenchRow> rows;
  for (std::size_t m = cfg.conflicts_min; m <= cfg.conflicts_max; ++m) {
    for (std::size_t trial = 0; trial < cfg.trials_per_point; ++trial) {
      const std::uint64_t seed = derive_seed(cfg.seed, m, trial);
      std::mt19937_64 graph_rng(seed);
      const auto conflicts = generate_random_conflicts(cfg.n_norms, m, cfg.duplicate_directed_pairs, graph_rng);
      const ConflictGraph g = build_graph_indexed(norms, conflicts);
      const Colouring phi = dsatur(g);

      for (BenchAlgorithm algorithm : cfg.algorithms) {
        const std::string name(bench_algorithm_name(algorithm));
        auto emit = [&](std::string policy, std::string_view metric, double value) {
          rows.push_back(BenchRow{m, trial, name, std::move(policy), std::string(metric), value, seed});
        };

        switch (algorithm) {
          case BenchAlgorithm::Resolve:
          case BenchAlgorithm::ResolveComplete: {
            const auto r = resolve(g, cfg.policy, phi,
                                       algorithm == BenchAlgorithm::Resolve ? Algorithm::Resolve
                                                                            : Algorithm::ResolveComplete);
            const auto ids = r.admitted();
            const auto admitted = to_indices(g, std::span<const NormId>(ids));
            emit(policy_name, metric_name(cfg.metric), detail::metric_value(cfg.metric, g, admitted, scoring));
            break;
          }
          case BenchAlgorithm::Curtail:
          case BenchAlgorithm::CurtailComplete: {
            const auto r = resolve(g, cfg.policy, phi,
                                       algorithm == BenchAlgorithm::Curtail ? Algorithm::Curtail
                                                                            : Algorithm::CurtailComplete);
            emit(policy_name, kUncurtailedCount, static_cast<double>(r.admitted_unconditionally().size()));
            emit(policy_name, kCurtailmentCount, static_cast<double>(r.curtailment_count()));
            break;
          }
          case BenchAlgorithm::RandomDrop: {
            std::mt19937_64 drop_rng(splitmix64(seed ^ 0x5851f42d4c957f2dULL));
            emit("none", metric_name(cfg.metric),
                 detail::metric_value(cfg.metric, g, random_drop(g, drop_rng), scoring));
            break;
          }
          case BenchAlgorithm::MaxAdmissible:
            emit("none", metric_name(cfg.metric),
                 detail::metric_value(cfg.metric, g, max_cardinality_admissible(g), scoring));
            break;
        }
      }
    }
  }
  return rows;
}

/// Mean value per (num_conflicts, algorithm, policy, metric).
inline std::vector<SummaryRow> summarise(const std::vector<BenchRow>& rows) {
  if (rows.empty()) throw Error(ErrorKind::EmptyInput, "no benchmark rows to summarise");
  using Key = std::tuple<std::size_t, std::string, std::string, std::string>;
  std::map<Key, std::pair<double, std::size_t>> acc;
  for (const auto& r : rows) {
    auto& [sum, count] = acc[Key{r.num_conflicts, r.algorithm, r.policy, r.metric}];
    sum += r.value;
    ++count;
  }
  std::vector<SummaryRow> out;
  out.reserve(acc.size());
  for (const auto& [key, v] : acc) {
    const auto& [m, algorithm, policy, metric] = key;
    out.push_back(SummaryRow{m, algorithm, policy, metric, v.first / static_cast<double>(v.second), v.second});
  }
  return out;
}

/// Named experiment setups.
///   oren-count: 16 norms, 1..240 directed conflicts, 10 trials, admitted
///               count under max-class against both baselines.
///   score-sum / score-avg: 16 norms, 1..120 undirected conflicts, 250
///               trials, fixed weak ordering (net), preference score.
inline std::optional<BenchConfig> preset(std::string_view name, std::uint64_t seed) {
  BenchConfig cfg;
  cfg.seed = seed;
  cfg.n_norms = 16;
  if (name == "oren-count") {
    cfg.conflicts_max = max_conflicts(16, true);
    cfg.duplicate_directed_pairs = true;
    cfg.trials_per_point = 10;
    cfg.algorithms = {BenchAlgorithm::Resolve, BenchAlgorithm::ResolveComplete, BenchAlgorithm::RandomDrop,
                      BenchAlgorithm::MaxAdmissible};
    cfg.policy = Policy::max_colour_class();
    cfg.metric = Metric::AdmittedCount;
    return cfg;
  }
  if (name == "score-sum" || name == "score-avg") {
    cfg.conflicts_max = max_conflicts(16, false);
    cfg.duplicate_directed_pairs = false;
    cfg.trials_per_point = 250;
    cfg.algorithms = {BenchAlgorithm::Resolve, BenchAlgorithm::ResolveComplete};
    cfg.policy = Policy::weak_order(fixed_weak_ordering(bench_norms(16)), ScoreMode::Net);
    cfg.metric = name == "score-sum" ? Metric::ScoreSum : Metric::ScoreAvg;
    return cfg;
  }
  return std::nullopt;
}

}  // namespace normcolour::bench
