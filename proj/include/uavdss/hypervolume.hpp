#pragma once

#include <span>
#include <string>
#include <vector>

#include "uavdss/model.hpp"
#include "uavdss/plan.hpp"

namespace uavdss {

using Point = std::vector<double>;

/// Exact hypervolume (minimization) of the union of boxes [p, ref].
///
/// WFG-style recursion: points sorted worst-first on the last objective, each
/// exclusive contribution computed from the limit set one dimension down.
/// Throws DomainError if a point is not weakly dominated by `ref`.
double hypervolume(std::span<const Point> points, std::span<const double> ref);

/// Criteria vectors of `plans` scaled to [0, 1] over the given set
/// (min -> 0, max -> 1; constant criteria map to 0). Maximized criteria are
/// flipped so that every coordinate is minimized.
std::vector<Point> normalized_objectives(std::span<const MissionPlan> plans, std::span<const Criterion> criteria);

/// Inclusive arithmetic grid start, start + step, ..., stop.
std::vector<double> threshold_grid(double start, double stop, double step);

/// Parses "start:stop:step".
std::vector<double> parse_threshold_grid(const std::string& spec);

struct SweepRow {
  double threshold = 0.0;
  std::size_t kept = 0;
  double hypervolume = 0.0;
};

/// Filters the ranked plans at each threshold and measures the hypervolume of
/// the kept set in normalized objective space (reference point all ones).
std::vector<SweepRow> threshold_sweep(std::span<const MissionPlan> ranked, const FilterWeights& w,
                                      std::span<const double> thresholds, std::span<const Criterion> criteria,
                                      FilterRule rule = FilterRule::Pairwise);

}  // namespace uavdss
