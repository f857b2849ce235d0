#include "uavdss/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "uavdss/error.hpp"

namespace uavdss {

int Ranking::rank_of(std::string_view id) const {
  for (const auto& entry : ordered) {
    if (entry.id == id) return entry.rank;
  }
  throw NotFoundError("alternative '" + std::string(id) + "' not in ranking of method " + method);
}

std::vector<std::size_t> Ranking::order() const {
  std::vector<std::size_t> out;
  out.reserve(ordered.size());
  for (const auto& entry : ordered) out.push_back(entry.index);
  return out;
}

std::vector<int> Ranking::ranks_by_index() const {
  std::vector<int> out(ordered.size(), 0);
  for (const auto& entry : ordered) out.at(entry.index) = entry.rank;
  return out;
}

bool scores_tied(double a, double b) {
  const double diff = std::abs(a - b);
  if (diff <= kTieAbsTol) return true;
  return diff <= kTieRelTol * std::max(std::abs(a), std::abs(b));
}

namespace {

// Best-first order with tie groups; each group is sorted by matrix row.
std::vector<std::vector<std::size_t>> score_groups(std::span<const double> scores, Sense sense) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sense == Sense::HigherIsBetter ? scores[a] > scores[b] : scores[a] < scores[b];
  });
  std::vector<std::vector<std::size_t>> groups;
  for (auto idx : order) {
    if (!groups.empty() && scores_tied(scores[groups.back().front()], scores[idx])) {
      groups.back().push_back(idx);
    } else {
      groups.push_back({idx});
    }
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

}  // namespace

std::vector<int> competition_ranks(std::span<const double> scores, Sense sense) {
  std::vector<int> ranks(scores.size(), 0);
  int position = 1;
  for (const auto& group : score_groups(scores, sense)) {
    for (auto idx : group) ranks[idx] = position;
    position += static_cast<int>(group.size());
  }
  return ranks;
}

Ranking rank_by_score(std::string method, std::span<const std::string> ids, std::span<const double> scores,
                      Sense sense) {
  if (ids.size() != scores.size()) throw ValidationError("rank_by_score: ids and scores differ in length");
  Ranking out;
  out.method = std::move(method);
  int position = 1;
  for (const auto& group : score_groups(scores, sense)) {
    for (auto idx : group) out.ordered.push_back({ids[idx], idx, position, scores[idx]});
    position += static_cast<int>(group.size());
  }
  return out;
}

Ranking rank_by_order(std::string method, std::span<const std::string> ids, std::span<const std::size_t> order,
                      const std::function<bool(std::size_t, std::size_t)>& tied, std::span<const double> scores) {
  if (order.size() != ids.size()) throw ValidationError("rank_by_order: order must list every alternative");
  if (!scores.empty() && scores.size() != ids.size()) {
    throw ValidationError("rank_by_order: ids and scores differ in length");
  }
  Ranking out;
  out.method = std::move(method);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto idx = order[pos];
    int rank = static_cast<int>(pos) + 1;
    if (pos > 0 && tied(order[pos - 1], idx)) rank = out.ordered.back().rank;
    std::optional<double> score;
    if (!scores.empty()) score = scores[idx];
    out.ordered.push_back({ids[idx], idx, rank, score});
  }
  return out;
}

}  // namespace uavdss
