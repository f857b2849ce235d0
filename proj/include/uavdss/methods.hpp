#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uavdss/crisp_methods.hpp"
#include "uavdss/fuzzy_methods.hpp"

namespace uavdss {

/// Parameters shared by all ranking methods. Unused fields are ignored.
struct MethodParams {
  double v = 0.5;       ///< VIKOR strategy weight
  double lambda = 0.5;  ///< WASPAS mix
  /// ELECTRE III thresholds; defaults to the mission thresholds.
  std::optional<ElectreThresholds> thresholds;
  /// RIM ranges; defaults to observed ranges with ideals widened by q.
  std::optional<RimParams> rim;
};

/// The sixteen method names: ten crisp followed by six fuzzy.
const std::vector<std::string>& method_names();
const std::vector<std::string>& crisp_method_names();
const std::vector<std::string>& fuzzy_method_names();

bool is_method(std::string_view name);
bool is_fuzzy_method(std::string_view name);

/// Ranks with the named method. Crisp methods take weights from the profile,
/// fuzzy methods take its membership TFNs, the AHP pair consumes it directly.
Ranking rank_alternatives(const DecisionMatrix& m, const OperatorProfile& profile, std::string_view method,
                          const MethodParams& params = {});

/// Parses a parameter block
///   {"method": "topsis", "norm": "vector", "fuzzy": true, "v": 0.5, "lambda": 0.5,
///    "thresholds": {"cost": {"q":..,"p":..,"v":..}}, "rim": {"cost": {"A":..,"B":..,"C":..,"D":..}}}
/// into a canonical method name and parameters.
std::pair<std::string, MethodParams> parse_method_block(const nlohmann::json& block);

/// Same, with the method chosen by name (a flag or argument rather than part of
/// a config file): an unknown name is NotFoundError.
std::pair<std::string, MethodParams> resolve_method(std::string_view method, nlohmann::json block);

nlohmann::json method_block(std::string_view method, const MethodParams& params);

}  // namespace uavdss
