#pragma once

#include <compare>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uavdss {

struct TaskUav {
  std::string task;
  std::string uav;

  auto operator<=>(const TaskUav&) const = default;
};

/// Assignments that make up one mission plan plus its criteria values.
struct MissionPlan {
  std::string id;
  std::map<std::string, std::set<std::string>> task_uavs;  ///< task -> UAVs performing it
  std::map<TaskUav, int> orders;                           ///< position of the task in the UAV's route
  std::map<std::string, std::string> gcs_assign;           ///< UAV -> controlling GCS
  std::map<TaskUav, std::string> path_profiles;            ///< flight profile on the way to the task
  std::map<std::string, std::string> return_profiles;      ///< UAV -> profile for the return leg
  std::map<TaskUav, std::string> sensors;                  ///< sensor used at the task
  std::map<std::string, double> criteria;

  bool performs(const TaskUav& key) const;

  /// Every per-pair key must be an assigned (task, uav) pair.
  /// Throws ValidationError.
  void validate() const;
};

/// Relative importance of each assignment family in the plan distance.
struct FilterWeights {
  double uav = 1.0;
  double order = 0.6;
  double gcs = 0.2;
  double path = 0.1;
  double ret = 0.1;
  double sensor = 0.1;

  void validate() const;
};

/// Number of differing entries per assignment family.
///
/// Delta_uav counts (task, uav) pairs present in exactly one plan. The other
/// families compare only keys present in both plans, so a structural change is
/// charged once, in Delta_uav.
struct PlanDeltas {
  int uav = 0;
  int order = 0;
  int gcs = 0;
  int path = 0;
  int ret = 0;
  int sensor = 0;

  friend bool operator==(const PlanDeltas&, const PlanDeltas&) = default;
};

PlanDeltas plan_deltas(const MissionPlan& a, const MissionPlan& b);

double plan_distance(const MissionPlan& a, const MissionPlan& b, const FilterWeights& w = {});

/// How a too-similar pair is resolved.
enum class FilterRule {
  /// Every pair within the threshold removes its lower-ranked member, whether
  /// or not the higher-ranked one survives. Kept sets shrink as the threshold
  /// grows.
  Pairwise,
  /// A plan is kept iff its distance to every already-kept plan exceeds the
  /// threshold. Kept sets need not be nested across thresholds.
  Greedy,
};

FilterRule parse_filter_rule(std::string_view name);
std::string_view filter_rule_name(FilterRule rule);

/// Best-first sweep over a ranked list. Returns kept positions in input
/// order; the first plan is always kept and no two kept plans lie within
/// `threshold` of each other.
std::vector<std::size_t> filter_plan_indices(std::span<const MissionPlan> ranked, const FilterWeights& w,
                                             double threshold, FilterRule rule = FilterRule::Pairwise);

std::vector<MissionPlan> filter_plans(std::span<const MissionPlan> ranked, const FilterWeights& w, double threshold,
                                      FilterRule rule = FilterRule::Pairwise);

/// Same sweep over a precomputed symmetric distance matrix (row-major, n x n).
std::vector<std::size_t> filter_by_distances(std::span<const double> distances, std::size_t n, double threshold,
                                             FilterRule rule = FilterRule::Pairwise);

/// Pairwise plan distances, row-major n x n.
std::vector<double> plan_distance_matrix(std::span<const MissionPlan> plans, const FilterWeights& w);

}  // namespace uavdss
