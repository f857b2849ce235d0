#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace uavdss {

struct RankedAlternative {
  std::string id;
  std::size_t index = 0;  ///< row in the source decision matrix
  int rank = 1;           ///< 1-based competition rank
  std::optional<double> score;
};

/// Alternatives ordered best first with competition ranks (1, 1, 3, ...).
struct Ranking {
  std::string method;
  std::vector<RankedAlternative> ordered;
  nlohmann::json metadata = nlohmann::json::object();

  /// Rank of an alternative id; throws NotFoundError if absent.
  int rank_of(std::string_view id) const;

  /// Matrix row indices, best first.
  std::vector<std::size_t> order() const;

  /// Rank of each matrix row, indexed by row.
  std::vector<int> ranks_by_index() const;
};

enum class Sense { HigherIsBetter, LowerIsBetter };

/// Relative tolerance under which two scores are declared tied.
inline constexpr double kTieRelTol = 1e-9;
/// Absolute floor for scores near zero.
inline constexpr double kTieAbsTol = 1e-12;

bool scores_tied(double a, double b);

/// Sorts alternatives by score; ties share a rank and keep matrix order.
Ranking rank_by_score(std::string method, std::span<const std::string> ids, std::span<const double> scores,
                      Sense sense);

/// Competition ranks of `scores` indexed like the input.
std::vector<int> competition_ranks(std::span<const double> scores, Sense sense);

/// Builds a ranking from an explicit best-first order. `tied(a, b)` says whether
/// two consecutive rows share a rank.
Ranking rank_by_order(std::string method, std::span<const std::string> ids, std::span<const std::size_t> order,
                      const std::function<bool(std::size_t, std::size_t)>& tied,
                      std::span<const double> scores = {});

}  // namespace uavdss
