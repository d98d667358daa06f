// paradox/report.hpp -- JSON serialization of analysis results and the
// aggregate ParadoxReport emitted by the command line tool.
//
// Undefined statistics (zero-variance correlations) serialize as JSON null.
// Serialization is lossless: every structure round-trips through its JSON
// form, and tests pin that down.
#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "metrics.hpp"
#include "perception.hpp"
#include "polling.hpp"
#include "predictor.hpp"
#include "structure.hpp"

namespace paradox {

inline constexpr const char* kToolVersion = "0.1.0";

using nlohmann::json;

namespace detail {

inline json opt_json(const std::optional<double>& x) {
  return x ? json(*x) : json(nullptr);
}

inline std::optional<double> opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

inline json bool_array(const std::vector<bool>& v) {
  json a = json::array();
  for (bool b : v) a.push_back(b);
  return a;
}

}  // namespace detail

inline const char* to_string(SfpMode mode) {
  return mode == SfpMode::weak ? "weak" : "strict";
}

inline SfpMode sfp_mode_from_string(const std::string& s) {
  if (s == "weak") return SfpMode::weak;
  if (s == "strict") return SfpMode::strict;
  throw std::invalid_argument("unknown dominance mode '" + s + "' (expected weak|strict)");
}

inline void to_json(json& j, const ParadoxSummary& s) {
  j = json{{"mean_degree", s.mean_degree},
           {"degree_variance", s.degree_variance},
           {"friend_mean_degree", s.friend_mean_degree},
           {"fp_gap", s.fp_gap},
           {"fp_fraction", s.fp_fraction},
           {"sfp_fraction_weak", s.sfp_fraction_weak},
           {"sfp_fraction_strict", s.sfp_fraction_strict},
           {"per_node",
            {{"fp", detail::bool_array(s.fp_node)},
             {"sfp_weak", detail::bool_array(s.sfp_weak_node)},
             {"sfp_strict", detail::bool_array(s.sfp_strict_node)}}}};
}

inline void from_json(const json& j, ParadoxSummary& s) {
  j.at("mean_degree").get_to(s.mean_degree);
  j.at("degree_variance").get_to(s.degree_variance);
  j.at("friend_mean_degree").get_to(s.friend_mean_degree);
  j.at("fp_gap").get_to(s.fp_gap);
  j.at("fp_fraction").get_to(s.fp_fraction);
  j.at("sfp_fraction_weak").get_to(s.sfp_fraction_weak);
  j.at("sfp_fraction_strict").get_to(s.sfp_fraction_strict);
  j.at("per_node").at("fp").get_to(s.fp_node);
  j.at("per_node").at("sfp_weak").get_to(s.sfp_weak_node);
  j.at("per_node").at("sfp_strict").get_to(s.sfp_strict_node);
}

inline void to_json(json& j, const DirectedParadoxSummary& s) {
  j = json{{"gaps",
            {{"friends_followers", s.gap_friends_followers},
             {"followers_friends", s.gap_followers_friends},
             {"friends_friends", s.gap_friends_friends},
             {"followers_followers", s.gap_followers_followers}}},
           {"per_node",
            {{"friends_followers", detail::bool_array(s.node_friends_followers)},
             {"followers_friends", detail::bool_array(s.node_followers_friends)},
             {"friends_friends", detail::bool_array(s.node_friends_friends)},
             {"followers_followers", detail::bool_array(s.node_followers_followers)}}},
           {"friend_follower_correlation",
            detail::opt_json(s.friend_follower_correlation)}};
}

inline void from_json(const json& j, DirectedParadoxSummary& s) {
  const auto& g = j.at("gaps");
  g.at("friends_followers").get_to(s.gap_friends_followers);
  g.at("followers_friends").get_to(s.gap_followers_friends);
  g.at("friends_friends").get_to(s.gap_friends_friends);
  g.at("followers_followers").get_to(s.gap_followers_followers);
  const auto& p = j.at("per_node");
  p.at("friends_followers").get_to(s.node_friends_followers);
  p.at("followers_friends").get_to(s.node_followers_friends);
  p.at("friends_friends").get_to(s.node_friends_friends);
  p.at("followers_followers").get_to(s.node_followers_followers);
  s.friend_follower_correlation = detail::opt_from(j.at("friend_follower_correlation"));
}

inline void to_json(json& j, const IllusionReport& r) {
  j = json{{"global_prevalence", r.global_prevalence},
           {"perceived_global", r.perceived_global},
           {"global_bias", r.global_bias},
           {"local_bias", r.local_bias},
           {"illusion_fraction", r.illusion_fraction},
           {"per_node_local_perception", r.per_node_local_perception}};
}

inline void from_json(const json& j, IllusionReport& r) {
  j.at("global_prevalence").get_to(r.global_prevalence);
  j.at("perceived_global").get_to(r.perceived_global);
  j.at("global_bias").get_to(r.global_bias);
  j.at("local_bias").get_to(r.local_bias);
  j.at("illusion_fraction").get_to(r.illusion_fraction);
  j.at("per_node_local_perception").get_to(r.per_node_local_perception);
}

inline void to_json(json& j, const SfpPrediction& p) {
  json per = json::array();
  for (const auto& [k, v] : p.per_degree) per.push_back(json::array({k, v}));
  j = json{{"method", p.correlated ? "correlated" : "independent"},
           {"mode", to_string(p.mode)},
           {"per_degree", std::move(per)},
           {"overall", p.overall},
           {"samples", p.samples},
           {"rho_nn", p.correlated ? json(p.rho_nn) : json(nullptr)},
           {"clamped_degrees", p.clamped_degrees}};
}

inline void from_json(const json& j, SfpPrediction& p) {
  p.correlated = j.at("method").get<std::string>() == "correlated";
  p.mode = sfp_mode_from_string(j.at("mode").get<std::string>());
  p.per_degree.clear();
  for (const auto& row : j.at("per_degree"))
    p.per_degree[row.at(0).get<int>()] = row.at(1).get<double>();
  j.at("overall").get_to(p.overall);
  j.at("samples").get_to(p.samples);
  p.rho_nn = j.at("rho_nn").is_null() ? 0.0 : j.at("rho_nn").get<double>();
  j.at("clamped_degrees").get_to(p.clamped_degrees);
}

inline void to_json(json& j, const PredictionReport& r) {
  json measured = json::array();
  for (const auto& [k, grp] : r.measured_by_degree)
    measured.push_back(json::array({k, grp.fraction, grp.count}));
  j = json{{"measured", {{"by_degree", std::move(measured)},
                         {"fraction", r.measured_fraction}}},
           {"independent", r.independent},
           {"correlated", r.correlated ? json(*r.correlated) : json(nullptr)},
           {"rho_nn", detail::opt_json(r.rho_nn)}};
}

inline void from_json(const json& j, PredictionReport& r) {
  r.measured_by_degree.clear();
  for (const auto& row : j.at("measured").at("by_degree"))
    r.measured_by_degree[row.at(0).get<int>()] = {row.at(1).get<double>(),
                                                  row.at(2).get<int>()};
  j.at("measured").at("fraction").get_to(r.measured_fraction);
  j.at("independent").get_to(r.independent);
  if (j.at("correlated").is_null())
    r.correlated.reset();
  else
    r.correlated = j.at("correlated").get<SfpPrediction>();
  r.rho_nn = detail::opt_from(j.at("rho_nn"));
}

inline void to_json(json& j, const DegreeModel& m) {
  json hist = json::array();
  for (const auto& [k, c] : m.histogram) hist.push_back(json::array({k, c}));
  json cond = json::array();
  for (const auto& [k, row] : m.conditional) {
    json r = json::array();
    for (const auto& [kp, prob] : row) r.push_back(json::array({kp, prob}));
    cond.push_back(json::array({k, std::move(r)}));
  }
  j = json{{"histogram", std::move(hist)},
           {"conditional", std::move(cond)},
           {"assortativity", detail::opt_json(m.assortativity)},
           {"transsortativity", detail::opt_json(m.transsortativity)}};
}

inline void from_json(const json& j, DegreeModel& m) {
  m.histogram.clear();
  m.conditional.clear();
  for (const auto& row : j.at("histogram"))
    m.histogram[row.at(0).get<int>()] = row.at(1).get<long long>();
  for (const auto& row : j.at("conditional")) {
    auto& out = m.conditional[row.at(0).get<int>()];
    for (const auto& cell : row.at(1))
      out.emplace_back(cell.at(0).get<int>(), cell.at(1).get<double>());
  }
  m.assortativity = detail::opt_from(j.at("assortativity"));
  m.transsortativity = detail::opt_from(j.at("transsortativity"));
}

inline void to_json(json& j, const PollResult& r) {
  j = json{{"method", r.method == PollMethod::node ? "node" : "friend"},
           {"correction",
            r.correction == FriendCorrection::inverse_degree ? "inverse_degree" : "none"},
           {"estimate", r.estimate},
           {"sample_size", r.sample_size},
           {"trials", r.trials},
           {"standard_error", r.standard_error}};
  if (r.trials > 1) j["replicate_estimates"] = r.replicate_estimates;
}

inline void from_json(const json& j, PollResult& r) {
  r.method = j.at("method").get<std::string>() == "node" ? PollMethod::node
                                                         : PollMethod::friend_of_node;
  r.correction = j.at("correction").get<std::string>() == "inverse_degree"
                     ? FriendCorrection::inverse_degree
                     : FriendCorrection::none;
  j.at("estimate").get_to(r.estimate);
  j.at("sample_size").get_to(r.sample_size);
  j.at("trials").get_to(r.trials);
  j.at("standard_error").get_to(r.standard_error);
  r.replicate_estimates.clear();
  if (j.contains("replicate_estimates"))
    j.at("replicate_estimates").get_to(r.replicate_estimates);
}

// Structural statistics block of a report. degree_attribute_correlation is
// meaningful only when attributes were supplied; has_attribute_correlation
// records whether the field applies at all, while nullopt inside an applying
// field still means "undefined" (zero variance).
struct StructureStats {
  std::optional<double> assortativity;
  std::optional<double> transsortativity;
  bool has_attribute_correlation = false;
  std::optional<double> degree_attribute_correlation;
};

inline void to_json(json& j, const StructureStats& s) {
  j = json{{"assortativity", detail::opt_json(s.assortativity)},
           {"transsortativity", detail::opt_json(s.transsortativity)}};
  if (s.has_attribute_correlation)
    j["degree_attribute_correlation"] = detail::opt_json(s.degree_attribute_correlation);
}

inline void from_json(const json& j, StructureStats& s) {
  s.assortativity = detail::opt_from(j.at("assortativity"));
  s.transsortativity = detail::opt_from(j.at("transsortativity"));
  s.has_attribute_correlation = j.contains("degree_attribute_correlation");
  if (s.has_attribute_correlation)
    s.degree_attribute_correlation = detail::opt_from(j.at("degree_attribute_correlation"));
}

// Attribute-level paradox block: generalized gap by both routes plus strong
// generalized paradox fractions. prevalence applies to binary traits only.
struct GeneralizedStats {
  std::string attribute_kind;  // "binary" | "numeric"
  std::optional<double> prevalence;
  double gfp_lhs = 0.0;
  double gfp_rhs = 0.0;
  double gfp_fraction = 0.0;  // nodes whose neighbor mean strictly exceeds them
  double gsfp_fraction_weak = 0.0;
  double gsfp_fraction_strict = 0.0;
};

inline void to_json(json& j, const GeneralizedStats& s) {
  j = json{{"attribute_kind", s.attribute_kind},
           {"prevalence", detail::opt_json(s.prevalence)},
           {"gfp_lhs", s.gfp_lhs},
           {"gfp_rhs", s.gfp_rhs},
           {"gfp_fraction", s.gfp_fraction},
           {"gsfp_fraction_weak", s.gsfp_fraction_weak},
           {"gsfp_fraction_strict", s.gsfp_fraction_strict}};
}

inline void from_json(const json& j, GeneralizedStats& s) {
  j.at("attribute_kind").get_to(s.attribute_kind);
  s.prevalence = detail::opt_from(j.at("prevalence"));
  j.at("gfp_lhs").get_to(s.gfp_lhs);
  j.at("gfp_rhs").get_to(s.gfp_rhs);
  j.at("gfp_fraction").get_to(s.gfp_fraction);
  j.at("gsfp_fraction_weak").get_to(s.gsfp_fraction_weak);
  j.at("gsfp_fraction_strict").get_to(s.gsfp_fraction_strict);
}

// Everything the analyze command knows about one network.
struct ParadoxReport {
  std::string network_name;
  int nodes = 0;
  long long edges = 0;
  bool directed = false;
  std::vector<std::string> labels;
  std::optional<ParadoxSummary> paradox;
  std::optional<DirectedParadoxSummary> directed_paradoxes;
  std::optional<StructureStats> structure;
  std::optional<GeneralizedStats> generalized;
  std::optional<IllusionReport> illusion;
  std::optional<PredictionReport> prediction;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> timestamp;
};

inline void to_json(json& j, const ParadoxReport& r) {
  j = json{{"tool_version", kToolVersion},
           {"network",
            {{"name", r.network_name},
             {"nodes", r.nodes},
             {"edges", r.edges},
             {"directed", r.directed},
             {"labels", r.labels}}}};
  if (r.paradox) j["paradox"] = *r.paradox;
  if (r.directed_paradoxes) j["directed_paradoxes"] = *r.directed_paradoxes;
  if (r.structure) j["structure"] = *r.structure;
  if (r.generalized) j["generalized"] = *r.generalized;
  if (r.illusion) j["illusion"] = *r.illusion;
  if (r.prediction) j["prediction"] = *r.prediction;
  if (r.seed) j["seed"] = *r.seed;
  if (r.timestamp) j["timestamp"] = *r.timestamp;
}

namespace detail {
template <typename T>
void get_opt_block(const json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key))
    out = j.at(key).get<T>();
  else
    out.reset();
}
}  // namespace detail

inline void from_json(const json& j, ParadoxReport& r) {
  const auto& net = j.at("network");
  net.at("name").get_to(r.network_name);
  net.at("nodes").get_to(r.nodes);
  net.at("edges").get_to(r.edges);
  net.at("directed").get_to(r.directed);
  net.at("labels").get_to(r.labels);
  detail::get_opt_block(j, "paradox", r.paradox);
  detail::get_opt_block(j, "directed_paradoxes", r.directed_paradoxes);
  detail::get_opt_block(j, "structure", r.structure);
  detail::get_opt_block(j, "generalized", r.generalized);
  detail::get_opt_block(j, "illusion", r.illusion);
  detail::get_opt_block(j, "prediction", r.prediction);
  detail::get_opt_block(j, "seed", r.seed);
  detail::get_opt_block(j, "timestamp", r.timestamp);
}

}  // namespace paradox
