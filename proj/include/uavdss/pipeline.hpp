#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "uavdss/dataset.hpp"
#include "uavdss/evaluation.hpp"
#include "uavdss/hypervolume.hpp"
#include "uavdss/methods.hpp"

namespace uavdss {

inline constexpr const char* kDefaultMethod = "fuzzy_vikor";
inline constexpr double kDefaultThreshold = 1.0;

struct PipelineConfig {
  std::string method = kDefaultMethod;
  MethodParams params;
  std::string profile = "Balanced";
  FilterWeights weights;
  FilterRule rule = FilterRule::Pairwise;
  double threshold = kDefaultThreshold;
  std::optional<std::filesystem::path> ranking_csv;
  std::optional<std::filesystem::path> filtered_json;

  /// Throws ValidationError or NotFoundError.
  void validate() const;
};

/// Reads {"method": ..., "profile": ..., "threshold": ..., "filter_rule": ..., "weights": {...},
/// "params": {...}, "ranking_csv": ..., "filtered_json": ...}; all optional.
PipelineConfig pipeline_config_from_json(const nlohmann::json& j);

struct PipelineResult {
  Ranking ranking;
  std::vector<MissionPlan> ranked_plans;  ///< ranking order
  std::vector<MissionPlan> filtered;      ///< subsequence of ranked_plans
};

/// Ranks with the configured method, filters the ranked plans, and writes the
/// configured output files.
PipelineResult run_pipeline(const MissionDataset& ds, const PipelineConfig& cfg);

/// Plans of `ds` reordered by `ranking`.
std::vector<MissionPlan> ranked_plans(const MissionDataset& ds, const Ranking& ranking);

/// Shortest round-trip decimal representation.
std::string format_number(double x);

/// Columns: rank, plan_id, score, method.
void write_ranking_csv(std::ostream& out, const Ranking& ranking);

nlohmann::json filtered_report(const MissionDataset& ds, const PipelineConfig& cfg, const PipelineResult& result);

/// Columns: threshold, kept, hypervolume.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

/// Plot data for a threshold/hypervolume chart.
nlohmann::json sweep_plot_json(const std::string& mission, const std::string& method, const std::string& profile,
                               std::span<const SweepRow> rows);

struct ScoringReport {
  std::vector<ScoreRecord> records;
  std::size_t degenerate = 0;  ///< decisions on single-plan missions
};

/// Scores the latest decision per (operator, profile, mission) against each
/// method's ranking. Unknown missions, profiles or plans throw.
ScoringReport score_decisions(std::span<const Decision> decisions, std::span<const MissionDataset> missions,
                              std::span<const std::string> methods, const MethodParams& params = {});

/// Columns: operator, mission, profile, method, score.
void write_score_csv(std::ostream& out, std::span<const ScoreRecord> records);

/// Columns: group keys, count, mean, median, sd.
void write_aggregate_csv(std::ostream& out, std::span<const GroupKey> keys, std::span<const AggregateRow> rows);

/// Crisp methods as rows, fuzzy methods as columns; each cell "diff" with a
/// trailing '*' when significant.
void write_comparison_csv(std::ostream& out, const ComparisonMatrix& m);
nlohmann::json to_json(const ComparisonMatrix& m);

}  // namespace uavdss
