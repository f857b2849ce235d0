#include "uavdss/methods.hpp"

#include <algorithm>

#include "uavdss/error.hpp"

namespace uavdss {

const std::vector<std::string>& crisp_method_names() {
  static const std::vector<std::string> names = {"wsm",           "wpm",      "ahp",        "vikor", "topsis_vector",
                                                 "topsis_linear", "electre3", "multimoora", "rim",   "waspas"};
  return names;
}

const std::vector<std::string>& fuzzy_method_names() {
  static const std::vector<std::string> names = {"fuzzy_ahp",           "fuzzy_vikor",      "fuzzy_topsis_vector",
                                                 "fuzzy_topsis_linear", "fuzzy_multimoora", "fuzzy_waspas"};
  return names;
}

const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names = [] {
    auto all = crisp_method_names();
    const auto& fuzzy = fuzzy_method_names();
    all.insert(all.end(), fuzzy.begin(), fuzzy.end());
    return all;
  }();
  return names;
}

bool is_method(std::string_view name) {
  const auto& all = method_names();
  return std::find(all.begin(), all.end(), name) != all.end();
}

bool is_fuzzy_method(std::string_view name) {
  const auto& fuzzy = fuzzy_method_names();
  return std::find(fuzzy.begin(), fuzzy.end(), name) != fuzzy.end();
}

Ranking rank_alternatives(const DecisionMatrix& m, const OperatorProfile& profile, std::string_view method,
                          const MethodParams& params) {
  if (!is_method(method)) throw NotFoundError("unknown ranking method '" + std::string(method) + "'");
  if (method == "ahp") return ahp(m, profile);
  if (method == "fuzzy_ahp") return fuzzy_ahp(m, profile);

  if (is_fuzzy_method(method)) {
    const auto fw = fuzzy_weights(profile, m.criteria());
    if (method == "fuzzy_vikor") return fuzzy_vikor(m, fw, params.v);
    if (method == "fuzzy_topsis_vector") return fuzzy_topsis(m, fw, Normalization::Vector);
    if (method == "fuzzy_topsis_linear") return fuzzy_topsis(m, fw, Normalization::Linear);
    if (method == "fuzzy_multimoora") return fuzzy_multimoora(m, fw);
    return fuzzy_waspas(m, fw, params.lambda);
  }

  const auto w = crisp_weights(profile, m.criteria());
  if (method == "wsm") return wsm(m, w);
  if (method == "wpm") return wpm(m, w);
  if (method == "vikor") return vikor(m, w, params.v);
  if (method == "topsis_vector") return topsis(m, w, Normalization::Vector);
  if (method == "topsis_linear") return topsis(m, w, Normalization::Linear);
  if (method == "multimoora") return multimoora(m, w);
  if (method == "waspas") return waspas(m, w, params.lambda);

  const auto& thresholds = params.thresholds ? *params.thresholds : mission_electre_thresholds();
  if (method == "electre3") return electre3(m, w, thresholds);
  const auto rim_params = params.rim ? *params.rim : rim_params_from_matrix(m, thresholds);
  return rim(m, w, rim_params);
}

std::pair<std::string, MethodParams> parse_method_block(const nlohmann::json& block) {
  if (!block.is_object()) throw ValidationError("method block must be an object", "/");
  if (!block.contains("method") || !block["method"].is_string()) {
    throw ValidationError("missing method name", "/method");
  }
  std::string name = block["method"].get<std::string>();
  if (name == "topsis" || name == "fuzzy_topsis") {
    const std::string norm = block.value("norm", std::string("vector"));
    if (norm != "vector" && norm != "linear") throw ValidationError("norm must be vector or linear", "/norm");
    name += "_" + norm;
  }
  if (block.value("fuzzy", false) && name.rfind("fuzzy_", 0) != 0) name = "fuzzy_" + name;
  if (!is_method(name)) throw ValidationError("unknown method '" + name + "'", "/method");

  MethodParams params;
  params.v = block.value("v", 0.5);
  params.lambda = block.value("lambda", 0.5);
  if (!(params.v >= 0.0 && params.v <= 1.0)) throw ValidationError("v outside [0, 1]", "/v");
  if (!(params.lambda >= 0.0 && params.lambda <= 1.0)) throw ValidationError("lambda outside [0, 1]", "/lambda");

  if (block.contains("thresholds")) {
    ElectreThresholds t;
    for (const auto& [id, value] : block["thresholds"].items()) {
      try {
        t.by_criterion[id] = {value.at("q").get<double>(), value.at("p").get<double>(), value.at("v").get<double>()};
      } catch (const nlohmann::json::exception&) {
        throw ValidationError("expected {q, p, v} numbers", "/thresholds/" + id);
      }
    }
    params.thresholds = std::move(t);
  }
  if (block.contains("rim")) {
    RimParams r;
    for (const auto& [id, value] : block["rim"].items()) {
      try {
        r.by_criterion[id] = {value.at("A").get<double>(), value.at("B").get<double>(), value.at("C").get<double>(),
                              value.at("D").get<double>()};
      } catch (const nlohmann::json::exception&) {
        throw ValidationError("expected {A, B, C, D} numbers", "/rim/" + id);
      }
    }
    params.rim = std::move(r);
  }
  return {name, params};
}

std::pair<std::string, MethodParams> resolve_method(std::string_view method, nlohmann::json block) {
  if (!block.is_object()) throw ValidationError("method block must be an object", "/");
  block["method"] = std::string(method);
  try {
    return parse_method_block(block);
  } catch (const ValidationError& e) {
    if (e.pointer() == "/method") throw NotFoundError("unknown method '" + std::string(method) + "'");
    throw;
  }
}

nlohmann::json method_block(std::string_view method, const MethodParams& params) {
  nlohmann::json out = {{"method", method}, {"v", params.v}, {"lambda", params.lambda}};
  out["fuzzy"] = is_fuzzy_method(method);
  if (params.thresholds) {
    for (const auto& [id, t] : params.thresholds->by_criterion) {
      out["thresholds"][id] = {{"q", t.q}, {"p", t.p}, {"v", t.v}};
    }
  }
  if (params.rim) {
    for (const auto& [id, r] : params.rim->by_criterion) {
      out["rim"][id] = {{"A", r.a}, {"B", r.b}, {"C", r.c}, {"D", r.d}};
    }
  }
  return out;
}

}  // namespace uavdss
