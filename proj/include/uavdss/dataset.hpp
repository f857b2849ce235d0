#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "uavdss/model.hpp"
#include "uavdss/plan.hpp"

namespace uavdss {

struct MissionMeta {
  int tasks = 1;
  int multi_uav_tasks = 0;
  int uavs = 1;
  int gcss = 1;
};

/// Plan set produced by the mission planner for one mission.
struct MissionDataset {
  std::string id;
  MissionMeta meta;
  std::vector<MissionPlan> plans;

  const MissionPlan& plan(std::string_view plan_id) const;  ///< throws NotFoundError
  bool has_plan(std::string_view plan_id) const;
};

/// Dataset file layout:
///
///   {"id": "dataset-01",
///    "meta": {"tasks": 6, "multi_uav_tasks": 1, "uavs": 3, "gcss": 1},
///    "plans": [{"id": "p01",
///               "assignments": [{"task": "T1", "uav": "U1", "order": 1, "path": "min", "sensor": "mR"}],
///               "uavs": [{"uav": "U1", "gcs": "G1", "return": "max"}],
///               "criteria": {"makespan": 2.5, ...}}]}
///
/// Every failure is a ValidationError whose pointer names the offending field.
MissionDataset dataset_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MissionDataset& ds);

MissionPlan plan_from_json(const nlohmann::json& j, const std::string& pointer = "");
nlohmann::json to_json(const MissionPlan& plan);

/// Reads and validates a dataset file.
MissionDataset ingest(const std::filesystem::path& path);

/// Writes `ds` as pretty-printed JSON.
void save_dataset(const MissionDataset& ds, const std::filesystem::path& path);

/// All *.json datasets in a directory, sorted by id; duplicate ids are rejected.
std::vector<MissionDataset> load_missions(const std::filesystem::path& dir);

/// Plans as rows, `criteria` as columns, in plan order.
DecisionMatrix to_decision_matrix(const MissionDataset& ds,
                                  const std::vector<Criterion>& criteria = mission_criteria());

}  // namespace uavdss
