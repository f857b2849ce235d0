#pragma once

#include <cstddef>
#include <filesystem>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uavdss/ranking.hpp"

namespace uavdss {

/// One recorded human selection of the best plan.
struct Decision {
  std::string operator_id;
  std::string profile;
  std::string mission;
  std::string plan;
  std::string timestamp;  ///< ISO-8601, informational
};

nlohmann::json to_json(const Decision& d);
/// Throws ValidationError with a JSON pointer on malformed input.
Decision decision_from_json(const nlohmann::json& j);

struct ScoreRecord {
  std::string operator_id;
  std::string mission;
  std::string profile;
  std::string method;
  double score = 0.0;
};

struct ScoreOutcome {
  double value = 0.0;
  /// Set when the mission has a single solution and the metric is undefined.
  bool degenerate_mission = false;
};

/// (num_solutions - rank) / (num_solutions - 1) for a 1-based rank.
ScoreOutcome score_from_rank(int rank, std::size_t num_solutions);

/// Scores the operator's chosen plan within a ranking; tied plans use their
/// shared competition rank.
ScoreOutcome score_ranking(const Ranking& ranking, std::string_view chosen_plan, std::size_t num_solutions);

enum class GroupKey { Operator, Mission, Profile, Method };

GroupKey parse_group_key(std::string_view name);
std::string_view group_key_name(GroupKey key);

struct AggregateRow {
  std::vector<std::string> key;  ///< one value per requested group key
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  double sd = 0.0;  ///< sample standard deviation; 0 for a single record
};

/// Groups in lexicographic key order. An empty key list yields one global row.
std::vector<AggregateRow> aggregate_scores(std::span<const ScoreRecord> records, std::span<const GroupKey> group_by);

struct WilcoxonResult {
  std::size_t n = 0;      ///< nonzero differences
  double w_plus = 0.0;    ///< rank sum of positive differences
  double w_minus = 0.0;   ///< rank sum of negative differences
  double p_value = 1.0;   ///< two-sided
  bool exact = true;
};

/// Differences with |d| below this are treated as zero and dropped; absolute
/// differences closer than this share an average rank.
inline constexpr double kWilcoxonZeroTol = 1e-12;

/// Largest number of nonzero differences handled by the exact null
/// distribution; above it a tie- and continuity-corrected normal approximation
/// is used.
inline constexpr std::size_t kWilcoxonExactLimit = 25;

WilcoxonResult wilcoxon_signed_rank(std::span<const double> differences);

struct MethodComparison {
  double mean_diff = 0.0;  ///< mean of (a - b) over paired records
  double p_value = 1.0;
  std::size_t pairs = 0;
  WilcoxonResult test;
};

/// Pairs records of methods a and b on (operator, mission, profile). When a key
/// repeats, the last record wins.
MethodComparison compare_methods(std::span<const ScoreRecord> records, std::string_view a, std::string_view b);

struct ComparisonCell {
  double diff = 0.0;  ///< fuzzy minus crisp
  double p_value = 1.0;
  bool significant = false;
};

/// Rows are crisp methods, columns fuzzy methods.
struct ComparisonMatrix {
  std::vector<std::string> crisp;
  std::vector<std::string> fuzzy;
  std::vector<std::vector<ComparisonCell>> cells;  ///< [crisp][fuzzy]
  double alpha = 0.05;
};

ComparisonMatrix comparison_matrix(std::span<const ScoreRecord> records, std::span<const std::string> fuzzy_methods,
                                   std::span<const std::string> crisp_methods, double alpha = 0.05);

/// Append-only JSON-lines store of decisions. Appends are serialized and each
/// record is written with a single write of one complete line.
class DecisionLog {
 public:
  explicit DecisionLog(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }

  /// All records in file order. Blank lines are skipped; malformed lines throw.
  std::vector<Decision> load() const;

  void append(const Decision& d);

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
};

/// Keeps the last decision per (operator, profile, mission), in first-seen order.
std::vector<Decision> latest_decisions(std::span<const Decision> log);

}  // namespace uavdss
