#include "uavdss/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "uavdss/error.hpp"

namespace uavdss {

const std::vector<Criterion>& mission_criteria() {
  static const std::vector<Criterion> criteria = {
      {"makespan", "Makespan", Direction::Minimize, "h"},
      {"cost", "Cost", Direction::Minimize, ""},
      {"fuel", "Fuel", Direction::Minimize, "kg"},
      {"distance", "Distance", Direction::Minimize, "km"},
      {"flight_time", "Flight Time", Direction::Minimize, "h"},
      {"risk_fuel_usage", "Risk Fuel Usage", Direction::Minimize, "%"},
      {"risk_distance_ground", "Risk Distance Ground", Direction::Minimize, "%"},
      {"risk_distance_uavs", "Risk Distance UAVs", Direction::Minimize, "%"},
      {"risk_out_of_coverage", "Risk Out of Coverage", Direction::Minimize, "%"},
      {"num_uavs", "Num UAVs", Direction::Minimize, "count"},
      {"num_gcss", "Num GCSs", Direction::Minimize, "count"},
  };
  return criteria;
}

DecisionMatrix::DecisionMatrix(std::vector<Criterion> criteria, std::vector<std::string> alternatives,
                               std::vector<double> values)
    : criteria_(std::move(criteria)), alternatives_(std::move(alternatives)), values_(std::move(values)) {
  if (criteria_.empty()) throw ValidationError("decision matrix needs at least one criterion");
  if (alternatives_.empty()) throw ValidationError("decision matrix needs at least one alternative");
  if (values_.size() != criteria_.size() * alternatives_.size()) {
    throw ValidationError("decision matrix has " + std::to_string(values_.size()) + " values, expected " +
                          std::to_string(criteria_.size() * alternatives_.size()));
  }
  std::set<std::string> seen;
  for (const auto& c : criteria_) {
    if (!seen.insert(c.id).second) throw ValidationError("duplicate criterion id '" + c.id + "'");
  }
  seen.clear();
  for (const auto& a : alternatives_) {
    if (!seen.insert(a).second) throw ValidationError("duplicate alternative id '" + a + "'");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw ValidationError("non-finite value for alternative '" + alternatives_[i / criteria_.size()] +
                            "', criterion '" + criteria_[i % criteria_.size()].id + "'");
    }
  }
}

std::vector<double> DecisionMatrix::column(std::size_t crit) const {
  std::vector<double> out(num_alternatives());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)(i, crit);
  return out;
}

DecisionMatrix DecisionMatrix::select_alternatives(std::span<const std::size_t> rows) const {
  std::vector<std::string> ids;
  std::vector<double> values;
  ids.reserve(rows.size());
  values.reserve(rows.size() * num_criteria());
  for (auto r : rows) {
    ids.push_back(alternatives_.at(r));
    auto src = row(r);
    values.insert(values.end(), src.begin(), src.end());
  }
  return DecisionMatrix(criteria_, std::move(ids), std::move(values));
}

ImportanceDegree parse_degree(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c == ' ' || c == '_' || c == '-') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (key == "verylow" || key == "1") return ImportanceDegree::VeryLow;
  if (key == "low" || key == "2") return ImportanceDegree::Low;
  if (key == "medium" || key == "3") return ImportanceDegree::Medium;
  if (key == "high" || key == "4") return ImportanceDegree::High;
  if (key == "veryhigh" || key == "5") return ImportanceDegree::VeryHigh;
  throw ValidationError("unknown importance degree '" + std::string(text) + "'");
}

std::string_view degree_name(ImportanceDegree degree) {
  switch (degree) {
    case ImportanceDegree::VeryLow: return "VeryLow";
    case ImportanceDegree::Low: return "Low";
    case ImportanceDegree::Medium: return "Medium";
    case ImportanceDegree::High: return "High";
    case ImportanceDegree::VeryHigh: return "VeryHigh";
  }
  return "?";
}

namespace {

OperatorProfile make_profile(std::string name, std::initializer_list<ImportanceDegree> column) {
  // column order follows mission_criteria()
  OperatorProfile p{std::move(name), {}};
  const auto& criteria = mission_criteria();
  std::size_t i = 0;
  for (auto d : column) p.degrees[criteria[i++].id] = d;
  return p;
}

}  // namespace

const std::vector<OperatorProfile>& builtin_profiles() {
  using D = ImportanceDegree;
  // makespan, cost, fuel, distance, flight_time, risk_fuel, risk_ground, risk_uavs, risk_coverage, uavs, gcss
  static const std::vector<OperatorProfile> profiles = {
      make_profile("Balanced", {D::Medium, D::Medium, D::Medium, D::Medium, D::Medium, D::Medium, D::Medium,
                                D::Medium, D::Medium, D::Medium, D::Medium}),
      make_profile("Cost", {D::Low, D::VeryHigh, D::High, D::Medium, D::Low, D::Medium, D::Medium, D::Medium,
                            D::Low, D::High, D::Medium}),
      make_profile("Time", {D::VeryHigh, D::Medium, D::Medium, D::Medium, D::High, D::Low, D::Low, D::Low, D::Low,
                            D::Medium, D::Medium}),
      make_profile("Risk", {D::Medium, D::Low, D::Medium, D::Low, D::Medium, D::VeryHigh, D::VeryHigh,
                            D::VeryHigh, D::VeryHigh, D::High, D::High}),
      make_profile("Resources", {D::Low, D::High, D::High, D::Medium, D::Low, D::Medium, D::Medium, D::Medium,
                                 D::Medium, D::VeryHigh, D::VeryHigh}),
      make_profile("RiskCost", {D::Low, D::VeryHigh, D::High, D::Medium, D::Low, D::VeryHigh, D::VeryHigh,
                                D::VeryHigh, D::VeryHigh, D::High, D::Medium}),
  };
  return profiles;
}

const OperatorProfile& builtin_profile(std::string_view name) {
  for (const auto& p : builtin_profiles()) {
    if (p.name == name) return p;
  }
  throw NotFoundError("unknown operator profile '" + std::string(name) + "'");
}

std::vector<double> WeightVector::aligned(std::span<const Criterion> criteria) const {
  std::vector<double> out;
  out.reserve(criteria.size());
  for (const auto& c : criteria) {
    auto it = weights.find(c.id);
    if (it == weights.end()) throw ValidationError("no weight for criterion '" + c.id + "'");
    out.push_back(it->second);
  }
  return out;
}

std::vector<Tfn> FuzzyWeightVector::aligned(std::span<const Criterion> criteria) const {
  std::vector<Tfn> out;
  out.reserve(criteria.size());
  for (const auto& c : criteria) {
    auto it = weights.find(c.id);
    if (it == weights.end()) throw ValidationError("no fuzzy weight for criterion '" + c.id + "'");
    out.push_back(it->second);
  }
  return out;
}

Tfn degree_tfn(ImportanceDegree degree) {
  switch (degree) {
    case ImportanceDegree::VeryLow: return {0.00, 0.10, 0.25};
    case ImportanceDegree::Low: return {0.15, 0.30, 0.45};
    case ImportanceDegree::Medium: return {0.35, 0.50, 0.65};
    case ImportanceDegree::High: return {0.55, 0.70, 0.85};
    case ImportanceDegree::VeryHigh: return {0.75, 0.90, 1.00};
  }
  throw ValidationError("invalid importance degree");
}

std::vector<ImportanceDegree> aligned_degrees(const OperatorProfile& profile, std::span<const Criterion> criteria) {
  std::vector<ImportanceDegree> out;
  out.reserve(criteria.size());
  for (const auto& c : criteria) {
    auto it = profile.degrees.find(c.id);
    if (it == profile.degrees.end()) {
      throw ValidationError("profile '" + profile.name + "' has no degree for criterion '" + c.id + "'");
    }
    const int level = static_cast<int>(it->second);
    if (level < 1 || level > 5) {
      throw ValidationError("profile '" + profile.name + "' has invalid degree for criterion '" + c.id + "'");
    }
    out.push_back(it->second);
  }
  if (profile.degrees.size() != criteria.size()) {
    for (const auto& [id, _] : profile.degrees) {
      if (std::none_of(criteria.begin(), criteria.end(), [&](const Criterion& c) { return c.id == id; })) {
        throw ValidationError("profile '" + profile.name + "' names unknown criterion '" + id + "'");
      }
    }
  }
  return out;
}

WeightVector crisp_weights(const OperatorProfile& profile, std::span<const Criterion> criteria) {
  const auto degrees = aligned_degrees(profile, criteria);
  double total = 0.0;
  for (auto d : degrees) total += static_cast<double>(d);
  WeightVector w;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    w.weights[criteria[i].id] = static_cast<double>(degrees[i]) / total;
  }
  return w;
}

FuzzyWeightVector fuzzy_weights(const OperatorProfile& profile, std::span<const Criterion> criteria) {
  const auto degrees = aligned_degrees(profile, criteria);
  FuzzyWeightVector w;
  for (std::size_t i = 0; i < criteria.size(); ++i) w.weights[criteria[i].id] = degree_tfn(degrees[i]);
  return w;
}

}  // namespace uavdss
