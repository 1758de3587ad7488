#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "normcolour/normcolour.hpp"

namespace normcolour::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kInputError = 2 };

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  file << text;
}

inline std::vector<NormId> split_ids(const std::string& list) {
  std::vector<NormId> ids;
  std::string item;
  std::istringstream ss(list);
  while (std::getline(ss, item, ','))
    if (!item.empty()) ids.emplace_back(item);
  return ids;
}

inline Policy make_policy(const std::string& name, const std::string& mode, const std::string& rank_file,
                          bool recent_wins) {
  const ScoreMode score_mode = mode == "gross" ? ScoreMode::Gross : ScoreMode::Net;
  if (name == "lex-posterior")
    return Policy::lex_posterior(score_mode, recent_wins ? TimeDirection::LaterWins : TimeDirection::EarlierWins);
  if (name == "lex-superior") return Policy::lex_superior(score_mode);
  if (name == "lex-specialis") return Policy::lex_specialis(score_mode);
  if (name == "max-class") return Policy::max_colour_class();
  if (rank_file.empty()) throw UsageError("--policy weak-order requires --rank-file");
  return Policy::weak_order(io::parse_rank_file(read_file(rank_file)), score_mode);
}

}  // namespace detail

/// Runs the command line. Usage problems exit 1, unreadable or invalid
/// input exits 2; diagnostics go to err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolve normative conflicts by colouring their conflict graph", "normcolour"};
  app.require_subcommand(1);

  std::string input, output, policy_name = "max-class", mode = "net", rank_file, algorithm_name_arg;
  bool recent_wins = false;
  auto* resolve_cmd = app.add_subcommand("resolve", "Admit norms with one of the colouring algorithms");
  resolve_cmd->add_option("--input", input, "Norm document (JSON)")->required();
  resolve_cmd->add_option("--algorithm", algorithm_name_arg, "Resolution algorithm")
      ->required()
      ->check(CLI::IsMember({"resolve", "resolve-complete", "curtail", "curtail-complete"}));
  resolve_cmd->add_option("--policy", policy_name, "Colour class heuristic")
      ->required()
      ->check(CLI::IsMember({"lex-posterior", "lex-superior", "lex-specialis", "weak-order", "max-class"}));
  resolve_cmd->add_option("--mode", mode, "Score wins only (gross) or wins minus losses (net)")
      ->check(CLI::IsMember({"gross", "net"}));
  resolve_cmd->add_option("--rank-file", rank_file, "JSON object of norm id -> integer rank (weak-order)");
  resolve_cmd->add_flag("--recent-wins", recent_wins, "lex-posterior: prefer the later declaration");
  resolve_cmd->add_option("--output", output, "Write the resolution here instead of stdout");

  std::string check_input, set_list;
  auto* check_cmd = app.add_subcommand("check", "Report argumentation properties of a set of norms");
  check_cmd->add_option("--input", check_input, "Norm document (JSON)")->required();
  check_cmd->add_option("--set", set_list, "Comma separated norm ids")->required();

  std::string preset_name, bench_out, bench_policy;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  bool summary = false;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark preset and write CSV");
  bench_cmd->add_option("--preset", preset_name, "Experiment preset")
      ->required()
      ->check(CLI::IsMember({"oren-count", "score-sum", "score-avg"}));
  bench_cmd->add_option("--seed", seed, "Master seed");
  bench_cmd->add_option("--trials", trials, "Override trials per conflict count")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--policy", bench_policy, "Override the preset policy")
      ->check(CLI::IsMember({"weak-order", "max-class"}));
  bench_cmd->add_flag("--summary", summary, "Write per-point means instead of raw rows");
  bench_cmd->add_option("--out", bench_out, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*resolve_cmd) {
      const ConflictGraph g = io::parse_norm_document(detail::read_file(input));
      const Policy p = detail::make_policy(policy_name, mode, rank_file, recent_wins);
      const Resolution r = resolve(g, p, *parse_algorithm(algorithm_name_arg));
      detail::write_output(output, io::write_resolution(r), out);
    } else if (*check_cmd) {
      const ConflictGraph g = io::parse_norm_document(detail::read_file(check_input));
      const auto ids = detail::split_ids(set_list);
      const auto report = check_extension(g, std::span<const NormId>(ids));
      out << "conflict_free=" << (report.conflict_free ? "true" : "false")
          << " admissible=" << (report.admissible ? "true" : "false")
          << " complete=" << (report.complete ? "true" : "false") << "\n";
    } else if (*bench_cmd) {
      auto cfg = *bench::preset(preset_name, seed);
      if (trials > 0) cfg.trials_per_point = trials;
      if (bench_policy == "max-class") cfg.policy = Policy::max_colour_class();
      if (bench_policy == "weak-order")
        cfg.policy = Policy::weak_order(bench::fixed_weak_ordering(bench::bench_norms(cfg.n_norms)));
      const auto rows = bench::run_benchmark(cfg);
      std::ostringstream csv;
      if (summary) io::write_summary_csv(csv, bench::summarise(rows));
      else io::write_bench_csv(csv, rows);
      detail::write_output(bench_out, csv.str(), out);
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace normcolour::cli
