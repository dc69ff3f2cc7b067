// Instance files and report serialisation.
//
// An instance file is a single JSON object:
//
//   {
//     "attributes": [{"name": "sex", "values": ["F", "M"]}, ...],
//     "candidates": [{"name": "Ann", "values": ["F", ...]}, ...],
//     "target":     {"sex": {"F": "1/2", "M": "1/2"}, ...},
//     "k": 4
//   }
//
// Rationals are strings ("num/den", an integer, or a decimal). Parsing is
// strict: unknown or missing fields are rejected with the offending path,
// and serialisation always emits attributes, labels and keys in schema
// order, so parse/serialise round-trips are byte identical.
#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mapr/apportionment.hpp"
#include "mapr/axioms.hpp"
#include "mapr/errors.hpp"
#include "mapr/model.hpp"
#include "mapr/solvers.hpp"

namespace mapr {

using Json = nlohmann::ordered_json;

namespace detail {

inline void require_keys(const Json& obj, const std::string& path,
                         const std::vector<std::string>& keys) {
  if (!obj.is_object()) throw DomainError(path + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw DomainError("unknown field '" + path + "." + key + "'");
  }
  for (const std::string& key : keys)
    if (!obj.contains(key)) throw DomainError("missing field '" + path + "." + key + "'");
}

inline std::string string_field(const Json& obj, const std::string& path) {
  if (!obj.is_string()) throw DomainError(path + " must be a string");
  return obj.get<std::string>();
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
  detail::require_keys(root, "instance", {"attributes", "candidates", "target", "k"});

  if (!root["attributes"].is_array() || root["attributes"].empty())
    throw DomainError("instance.attributes must be a non-empty array");
  std::vector<AttributeSchema::Attribute> attrs;
  for (std::size_t i = 0; i < root["attributes"].size(); ++i) {
    const Json& a = root["attributes"][i];
    const std::string path = "attributes[" + std::to_string(i) + "]";
    detail::require_keys(a, path, {"name", "values"});
    AttributeSchema::Attribute attr;
    attr.name = detail::string_field(a["name"], path + ".name");
    if (!a["values"].is_array()) throw DomainError(path + ".values must be an array");
    for (std::size_t j = 0; j < a["values"].size(); ++j)
      attr.values.push_back(
          detail::string_field(a["values"][j], path + ".values[" + std::to_string(j) + "]"));
    attrs.push_back(std::move(attr));
  }
  AttributeSchema schema(std::move(attrs));

  if (!root["candidates"].is_array())
    throw DomainError("instance.candidates must be an array");
  std::vector<CandidateDatabase::Candidate> cands;
  for (std::size_t c = 0; c < root["candidates"].size(); ++c) {
    const Json& e = root["candidates"][c];
    const std::string path = "candidates[" + std::to_string(c) + "]";
    detail::require_keys(e, path, {"name", "values"});
    CandidateDatabase::Candidate cand;
    cand.name = detail::string_field(e["name"], path + ".name");
    if (!e["values"].is_array() || e["values"].size() != schema.attribute_count())
      throw DomainError(path + ".values must list one label per attribute");
    for (std::size_t i = 0; i < schema.attribute_count(); ++i) {
      std::string label =
          detail::string_field(e["values"][i], path + ".values[" + std::to_string(i) + "]");
      cand.values.push_back(static_cast<int>(schema.value_index(i, label)));
    }
    cands.push_back(std::move(cand));
  }
  CandidateDatabase db(std::move(schema), std::move(cands));

  std::vector<std::string> attr_names;
  for (const auto& a : db.schema.attributes) attr_names.push_back(a.name);
  detail::require_keys(root["target"], "target", attr_names);
  std::vector<std::vector<Rat>> targets;
  for (std::size_t i = 0; i < db.schema.attribute_count(); ++i) {
    const auto& attr = db.schema.attributes[i];
    detail::require_keys(root["target"][attr.name], "target." + attr.name, attr.values);
    std::vector<Rat> row;
    for (const std::string& label : attr.values) {
      const std::string path = "target." + attr.name + "." + label;
      try {
        row.push_back(rat_from_string(detail::string_field(root["target"][attr.name][label], path)));
      } catch (const DomainError& e) {
        throw DomainError(path + ": " + e.what());
      }
    }
    targets.push_back(std::move(row));
  }

  if (!root["k"].is_number_integer() || root["k"].get<long long>() < 1)
    throw DomainError("instance.k must be a positive integer");

  return Instance(std::move(db), TargetDistribution(std::move(targets)),
                  static_cast<int>(root["k"].get<long long>()));
}

inline Json instance_to_json(const Instance& inst) {
  Json root = Json::object();
  root["attributes"] = Json::array();
  for (const auto& a : inst.db.schema.attributes)
    root["attributes"].push_back({{"name", a.name}, {"values", a.values}});
  root["candidates"] = Json::array();
  for (const auto& c : inst.db.candidates) {
    Json labels = Json::array();
    for (std::size_t i = 0; i < c.values.size(); ++i)
      labels.push_back(inst.db.schema.attributes[i].values[static_cast<std::size_t>(c.values[i])]);
    root["candidates"].push_back({{"name", c.name}, {"values", labels}});
  }
  root["target"] = Json::object();
  for (std::size_t i = 0; i < inst.db.schema.attribute_count(); ++i) {
    const auto& a = inst.db.schema.attributes[i];
    Json row = Json::object();
    for (std::size_t j = 0; j < a.values.size(); ++j)
      row[a.values[j]] = to_string(inst.target.at(i, j));
    root["target"][a.name] = row;
  }
  root["k"] = inst.k;
  return root;
}

inline std::string serialize_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

namespace detail {

inline Json committee_names(const Instance& inst, const Committee& committee) {
  Json names = Json::array();
  for (int c : committee.members) names.push_back(inst.db.candidates[static_cast<std::size_t>(c)].name);
  return names;
}

}  // namespace detail

inline Json solve_report_json(const Instance& inst, std::optional<LossKind> kind,
                              const SolveReport& report) {
  Json root = Json::object();
  root["schema_version"] = 1;
  root["command"] = "solve";
  root["algorithm"] = report.algorithm;
  if (kind) root["loss_kind"] = to_string(*kind);
  root["k"] = inst.k;
  root["feasible"] = report.feasible;
  root["loss"] = report.feasible ? Json(to_string(report.loss_value)) : Json(nullptr);
  root["committees"] = Json::array();
  for (const Committee& c : report.committees)
    root["committees"].push_back(detail::committee_names(inst, c));
  root["optima_truncated"] = report.optima_truncated;

  if (report.feasible && !report.committees.empty()) {
    RepresentationVector rep = representation_vector(inst.db, report.committees[0]);
    Json rows = Json::array();
    for (std::size_t i = 0; i < inst.db.schema.attribute_count(); ++i) {
      const auto& a = inst.db.schema.attributes[i];
      Json entries = Json::array();
      for (std::size_t j = 0; j < a.values.size(); ++j)
        entries.push_back({{"label", a.values[j]},
                           {"target", to_string(inst.target.at(i, j))},
                           {"achieved", to_string(rep.fraction(i, j))},
                           {"seats", rep.seats(i, j)}});
      rows.push_back({{"attribute", a.name}, {"entries", entries}});
    }
    root["representation"] = rows;
  }

  Json trace = Json::object();
  trace["nodes"] = report.trace.nodes_expanded;
  trace["swaps_examined"] = report.trace.swaps_examined;
  trace["accepted_swaps"] = report.trace.iterations;
  trace["iteration_limit_hit"] = report.iteration_limit_hit;
  if (!report.trace.accepted.empty()) {
    Json swaps = Json::array();
    for (const SwapRecord& s : report.trace.accepted) {
      Json rec = Json::object();
      rec["removed"] = detail::committee_names(inst, Committee(s.removed));
      rec["added"] = detail::committee_names(inst, Committee(s.added));
      rec["loss"] = to_string(s.loss_after);
      swaps.push_back(rec);
    }
    trace["swaps"] = swaps;
  }
  root["trace"] = trace;
  if (report.seed) root["seed"] = *report.seed;
  return root;
}

inline Json apportion_report_json(const std::vector<Rat>& weights, int k, QuotaKind quota,
                                  const ApportionmentResult& result,
                                  std::size_t all_tied_cap = 1000) {
  Json root = Json::object();
  root["schema_version"] = 1;
  root["command"] = "apportion";
  root["quota"] = to_string(quota);
  root["k"] = k;
  root["quota_value"] = to_string(result.quota_value);
  Json w = Json::array(), ideal = Json::array();
  for (const Rat& x : weights) w.push_back(to_string(x));
  for (const Rat& x : result.ideal) ideal.push_back(to_string(x));
  root["weights"] = w;
  root["ideal_seats"] = ideal;
  root["canonical"] = result.canonical;
  Json tied = Json::array();
  for (std::size_t i = 0; i < result.all_tied.size() && i < all_tied_cap; ++i)
    tied.push_back(result.all_tied[i]);
  root["all_tied"] = tied;
  root["all_tied_truncated"] = result.all_tied.size() > all_tied_cap;
  return root;
}

}  // namespace mapr
