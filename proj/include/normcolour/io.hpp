#pragma once

#include <algorithm>
#include <cstdint>
#include <locale>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "normcolour/bench.hpp"
#include "normcolour/colouring.hpp"
#include "normcolour/error.hpp"
#include "normcolour/graph.hpp"
#include "normcolour/policies.hpp"
#include "normcolour/resolution.hpp"

// JSON documents for graphs, resolutions and rank files, and the CSV layout
// of benchmark output.
//
// Norm document:
//   {"norms": [{"id": "a", "label": "...", "declared_at": 0,
//               "authority_rank": 0, "antecedents": ["x"]}, ...],
//    "conflicts": [["a", "b"], ...]}
// Only "id" is required per norm; ids may be strings or integers.

namespace normcolour::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
}

[[noreturn]] inline void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::SchemaError, where + ": " + what);
}

inline NormId read_id(const Json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>().empty()) schema_error(where, "id must not be empty");
    return NormId(j.get<std::string>());
  }
  if (j.is_number_integer()) return NormId(std::to_string(j.get<std::int64_t>()));
  schema_error(where, "id must be a string or an integer");
}

inline std::int64_t read_int(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) return 0;
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) schema_error(where + "." + key, "expected an integer");
  return v.get<std::int64_t>();
}

inline const Json& require_array(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) schema_error(where, std::string("missing \"") + key + "\"");
  const Json& v = obj.at(key);
  if (!v.is_array()) schema_error(where + "." + key, "expected an array");
  return v;
}

inline Json colouring_json(const Colouring& phi) { return Json(phi.assignment); }

inline Colouring read_colouring(const Json& j, std::size_t num_colours, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of colours");
  Colouring phi;
  phi.num_colours = num_colours;
  for (const auto& c : j) {
    if (!c.is_number_unsigned()) schema_error(where, "colours must be non-negative integers");
    phi.assignment.push_back(c.get<ColourId>());
  }
  return phi;
}

}  // namespace detail

/// Parses a norm document into a graph. Failures carry the JSON path or the
/// line/column of the offending input.
inline ConflictGraph parse_norm_document(std::string_view text) {
  const Json doc = detail::parse_json(text);
  if (!doc.is_object()) detail::schema_error("$", "document must be an object");

  std::vector<Norm> norms;
  std::unordered_map<NormId, std::size_t> seen;
  const Json& jnorms = detail::require_array(doc, "norms", "$");
  for (std::size_t i = 0; i < jnorms.size(); ++i) {
    const std::string where = "norms[" + std::to_string(i) + "]";
    const Json& jn = jnorms[i];
    if (!jn.is_object()) detail::schema_error(where, "norm must be an object");
    if (!jn.contains("id")) detail::schema_error(where, "missing \"id\"");

    Norm n;
    n.id = detail::read_id(jn.at("id"), where + ".id");
    if (!seen.emplace(n.id, i).second)
      throw Error(ErrorKind::DuplicateNormId, where + ": id '" + n.id.str() + "' already used by norms[" +
                                                  std::to_string(seen[n.id]) + "]");
    if (jn.contains("label")) {
      if (!jn.at("label").is_string()) detail::schema_error(where + ".label", "expected a string");
      n.label = jn.at("label").get<std::string>();
    }
    n.declared_at = detail::read_int(jn, "declared_at", where);
    n.authority_rank = detail::read_int(jn, "authority_rank", where);
    if (jn.contains("antecedents")) {
      const Json& ants = detail::require_array(jn, "antecedents", where);
      for (const auto& a : ants) {
        if (!a.is_string()) detail::schema_error(where + ".antecedents", "antecedents must be strings");
        if (!n.antecedents.insert(a.get<std::string>()).second)
          detail::schema_error(where + ".antecedents", "duplicate antecedent '" + a.get<std::string>() + "'");
      }
    }
    norms.push_back(std::move(n));
  }

  std::vector<Conflict> conflicts;
  if (doc.contains("conflicts")) {
    const Json& jconf = detail::require_array(doc, "conflicts", "$");
    for (std::size_t i = 0; i < jconf.size(); ++i) {
      const std::string where = "conflicts[" + std::to_string(i) + "]";
      const Json& pair = jconf[i];
      if (!pair.is_array() || pair.size() != 2) detail::schema_error(where, "conflict must be a pair of ids");
      NormId a = detail::read_id(pair[0], where);
      NormId b = detail::read_id(pair[1], where);
      for (const NormId* id : {&a, &b})
        if (!seen.count(*id)) throw Error(ErrorKind::UnknownNormId, where + ": no norm with id '" + id->str() + "'");
      if (a == b) throw Error(ErrorKind::SelfConflict, where + ": norm '" + a.str() + "' conflicts with itself");
      conflicts.emplace_back(std::move(a), std::move(b));
    }
  }
  return build_graph(std::move(norms), conflicts);
}

/// Norm document for g; metadata fields at their defaults are omitted.
inline std::string write_graph(const ConflictGraph& g) {
  Json doc;
  doc["norms"] = Json::array();
  for (const Norm& n : g.norms()) {
    Json jn;
    jn["id"] = n.id.str();
    if (!n.label.empty()) jn["label"] = n.label;
    if (n.declared_at != 0) jn["declared_at"] = n.declared_at;
    if (n.authority_rank != 0) jn["authority_rank"] = n.authority_rank;
    if (!n.antecedents.empty()) jn["antecedents"] = n.antecedents;
    doc["norms"].push_back(std::move(jn));
  }
  doc["conflicts"] = Json::array();
  for (auto [a, b] : g.edges()) doc["conflicts"].push_back(Json::array({g.id(a).str(), g.id(b).str()}));
  return doc.dump(2) + "\n";
}

inline std::string write_resolution(const Resolution& r) {
  Json doc;
  doc["algorithm"] = std::string(algorithm_name(r.algorithm));
  doc["policy"] = r.policy;
  doc["colours_used"] = r.colouring_used.num_colours;
  doc["colour_order"] = r.colour_order;
  doc["colouring"] = detail::colouring_json(r.colouring_used);
  doc["final_colouring"] = detail::colouring_json(r.final_colouring);
  doc["entries"] = Json::array();
  for (const auto& e : r.entries) {
    Json je;
    je["norm"] = e.norm.str();
    je["curtailed_wrt"] = Json::array();
    for (const auto& w : e.curtailed_wrt) je["curtailed_wrt"].push_back(w.str());
    je["iteration"] = e.iteration;
    doc["entries"].push_back(std::move(je));
  }
  return doc.dump(2) + "\n";
}

inline Resolution parse_resolution(std::string_view text) {
  const Json doc = detail::parse_json(text);
  if (!doc.is_object()) detail::schema_error("$", "document must be an object");
  Resolution r;
  try {
    const auto algorithm = parse_algorithm(doc.at("algorithm").get<std::string>());
    if (!algorithm) detail::schema_error("$.algorithm", "unknown algorithm");
    r.algorithm = *algorithm;
    r.policy = doc.at("policy").get<std::string>();
    const auto k = doc.at("colours_used").get<std::size_t>();
    r.colour_order = doc.at("colour_order").get<std::vector<ColourId>>();
    r.colouring_used = detail::read_colouring(doc.at("colouring"), k, "$.colouring");
    r.final_colouring = detail::read_colouring(doc.at("final_colouring"), k, "$.final_colouring");
    for (const auto& je : detail::require_array(doc, "entries", "$")) {
      CurtailedNorm e;
      e.norm = NormId(je.at("norm").get<std::string>());
      for (const auto& w : je.at("curtailed_wrt")) e.curtailed_wrt.emplace_back(w.get<std::string>());
      e.iteration = je.value("iteration", std::size_t{0});
      r.entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaError, e.what());
  }
  return r;
}

/// Rank file: {"norm id": integer rank, ...}.
inline WeakOrdering parse_rank_file(std::string_view text) {
  const Json doc = detail::parse_json(text);
  if (!doc.is_object()) detail::schema_error("$", "rank file must map norm ids to integers");
  WeakOrdering w;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number_integer()) detail::schema_error("$." + key, "rank must be an integer");
    w.rank[NormId(key)] = value.get<std::int64_t>();
  }
  return w;
}

/// Up to 6 significant digits, shortest form ("15", "2.5", "0.333333").
inline std::string format_value(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(6);
  os << v;
  return os.str();
}

inline void write_bench_csv(std::ostream& out, const std::vector<bench::BenchRow>& rows) {
  out << "num_conflicts,trial,algorithm,policy,metric,value,seed\n";
  for (const auto& r : rows)
    out << r.num_conflicts << ',' << r.trial << ',' << r.algorithm << ',' << r.policy << ',' << r.metric << ','
        << format_value(r.value) << ',' << r.seed << '\n';
}

inline void write_summary_csv(std::ostream& out, const std::vector<bench::SummaryRow>& rows) {
  out << "num_conflicts,algorithm,policy,metric,mean,count\n";
  for (const auto& r : rows)
    out << r.num_conflicts << ',' << r.algorithm << ',' << r.policy << ',' << r.metric << ','
        << format_value(r.mean) << ',' << r.count << '\n';
}

}  // namespace normcolour::io
