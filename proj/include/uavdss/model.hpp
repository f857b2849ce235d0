#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uavdss/tfn.hpp"

namespace uavdss {

enum class Direction { Minimize, Maximize };

struct Criterion {
  std::string id;
  std::string label;
  Direction direction = Direction::Minimize;
  std::string unit;
};

/// The eleven mission criteria, all minimized.
const std::vector<Criterion>& mission_criteria();

/// Alternatives x criteria performance values, row-major.
///
/// Row order is the canonical iteration and tie-breaking order for every
/// ranking method.
class DecisionMatrix {
 public:
  DecisionMatrix(std::vector<Criterion> criteria, std::vector<std::string> alternatives,
                 std::vector<double> values);

  std::size_t num_alternatives() const { return alternatives_.size(); }
  std::size_t num_criteria() const { return criteria_.size(); }

  double operator()(std::size_t alt, std::size_t crit) const { return values_[alt * criteria_.size() + crit]; }

  std::span<const double> row(std::size_t alt) const {
    return {values_.data() + alt * criteria_.size(), criteria_.size()};
  }
  std::vector<double> column(std::size_t crit) const;

  const std::vector<Criterion>& criteria() const { return criteria_; }
  const std::vector<std::string>& alternatives() const { return alternatives_; }

  bool maximized(std::size_t crit) const { return criteria_[crit].direction == Direction::Maximize; }

  /// Sub-matrix keeping the given rows, in the given order.
  DecisionMatrix select_alternatives(std::span<const std::size_t> rows) const;

 private:
  std::vector<Criterion> criteria_;
  std::vector<std::string> alternatives_;
  std::vector<double> values_;
};

enum class ImportanceDegree : int { VeryLow = 1, Low = 2, Medium = 3, High = 4, VeryHigh = 5 };

/// Accepts "VeryLow", "Very low", "very_low", "very-low" and "1".."5".
ImportanceDegree parse_degree(std::string_view text);
std::string_view degree_name(ImportanceDegree degree);

struct OperatorProfile {
  std::string name;
  std::map<std::string, ImportanceDegree> degrees;
};

/// The six operator profiles used in the mission experiments:
/// Balanced, Cost, Time, Risk, Resources, RiskCost.
const std::vector<OperatorProfile>& builtin_profiles();
const OperatorProfile& builtin_profile(std::string_view name);

struct WeightVector {
  std::map<std::string, double> weights;

  /// Weights in the order of `criteria`; throws ValidationError if one is missing.
  std::vector<double> aligned(std::span<const Criterion> criteria) const;
};

struct FuzzyWeightVector {
  std::map<std::string, Tfn> weights;

  std::vector<Tfn> aligned(std::span<const Criterion> criteria) const;
};

/// Membership function of a linguistic degree.
Tfn degree_tfn(ImportanceDegree degree);

/// w(f) = D(f) / sum of D over the criteria.
WeightVector crisp_weights(const OperatorProfile& profile, std::span<const Criterion> criteria);

FuzzyWeightVector fuzzy_weights(const OperatorProfile& profile, std::span<const Criterion> criteria);

/// Profile degrees aligned with `criteria`; rejects missing and extra keys.
std::vector<ImportanceDegree> aligned_degrees(const OperatorProfile& profile, std::span<const Criterion> criteria);

}  // namespace uavdss
