#include "uavdss/hypervolume.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "uavdss/error.hpp"

namespace uavdss {
namespace {

bool weakly_dominates(const Point& a, const Point& b, std::size_t dims) {
  for (std::size_t k = 0; k < dims; ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

std::vector<Point> nondominated(std::vector<Point> pts, std::size_t dims) {
  std::vector<Point> out;
  std::vector<bool> dead(pts.size(), false);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (dead[i]) continue;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j || dead[j]) continue;
      // identical points: keep the first copy
      if (weakly_dominates(pts[j], pts[i], dims) && (j < i || pts[j] != pts[i])) {
        dead[i] = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!dead[i]) out.push_back(std::move(pts[i]));
  }
  return out;
}

double box_volume(const Point& p, std::span<const double> ref, std::size_t dims) {
  double v = 1.0;
  for (std::size_t k = 0; k < dims; ++k) v *= ref[k] - p[k];
  return v;
}

double hv_recursive(std::vector<Point> pts, std::span<const double> ref, std::size_t dims) {
  if (pts.empty()) return 0.0;
  if (pts.size() == 1) return box_volume(pts[0], ref, dims);
  if (dims == 1) {
    double best = pts[0][0];
    for (const auto& p : pts) best = std::min(best, p[0]);
    return ref[0] - best;
  }
  if (dims == 2) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a[0] < b[0]; });
    double volume = 0.0;
    double ceiling = ref[1];
    for (const auto& p : pts) {
      if (p[1] < ceiling) {
        volume += (ref[0] - p[0]) * (ceiling - p[1]);
        ceiling = p[1];
      }
    }
    return volume;
  }

  const std::size_t last = dims - 1;
  std::sort(pts.begin(), pts.end(), [last](const Point& a, const Point& b) { return a[last] > b[last]; });
  double volume = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const double height = ref[last] - p[last];
    if (height <= 0.0) continue;
    std::vector<Point> limit;
    limit.reserve(pts.size() - i - 1);
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Point q(last);
      for (std::size_t k = 0; k < last; ++k) q[k] = std::max(p[k], pts[j][k]);
      limit.push_back(std::move(q));
    }
    const double exclusive = box_volume(p, ref, last) - hv_recursive(nondominated(std::move(limit), last), ref, last);
    volume += height * exclusive;
  }
  return volume;
}

}  // namespace

double hypervolume(std::span<const Point> points, std::span<const double> ref) {
  const std::size_t dims = ref.size();
  if (dims == 0) throw DomainError("hypervolume: zero-dimensional reference point");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dims) throw DomainError("hypervolume: point dimension mismatch");
    for (std::size_t k = 0; k < dims; ++k) {
      if (!(points[i][k] <= ref[k])) {
        std::ostringstream msg;
        msg << "hypervolume: point " << i << " exceeds the reference point on objective " << k;
        throw DomainError(msg.str());
      }
    }
  }
  if (points.empty()) return 0.0;

  // Objectives on which every point agrees contribute a constant factor.
  double factor = 1.0;
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < dims; ++k) {
    const double first = points[0][k];
    const bool constant =
        std::all_of(points.begin(), points.end(), [&](const Point& p) { return p[k] == first; });
    if (constant) {
      factor *= ref[k] - first;
    } else {
      active.push_back(k);
    }
  }
  if (factor == 0.0) return 0.0;
  if (active.empty()) return factor;

  std::vector<Point> reduced;
  reduced.reserve(points.size());
  Point reduced_ref(active.size());
  for (std::size_t a = 0; a < active.size(); ++a) reduced_ref[a] = ref[active[a]];
  for (const auto& p : points) {
    Point q(active.size());
    for (std::size_t a = 0; a < active.size(); ++a) q[a] = p[active[a]];
    reduced.push_back(std::move(q));
  }
  return factor * hv_recursive(nondominated(std::move(reduced), active.size()), reduced_ref, active.size());
}

std::vector<Point> normalized_objectives(std::span<const MissionPlan> plans, std::span<const Criterion> criteria) {
  std::vector<Point> out(plans.size(), Point(criteria.size(), 0.0));
  for (std::size_t f = 0; f < criteria.size(); ++f) {
    std::vector<double> col(plans.size());
    for (std::size_t i = 0; i < plans.size(); ++i) {
      auto it = plans[i].criteria.find(criteria[f].id);
      if (it == plans[i].criteria.end()) {
        throw ValidationError("plan '" + plans[i].id + "' lacks criterion '" + criteria[f].id + "'");
      }
      col[i] = it->second;
    }
    if (col.empty()) continue;
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    const double span = *hi - *lo;
    for (std::size_t i = 0; i < plans.size(); ++i) {
      double x = span > 0.0 ? (col[i] - *lo) / span : 0.0;
      if (criteria[f].direction == Direction::Maximize && span > 0.0) x = 1.0 - x;
      out[i][f] = x;
    }
  }
  return out;
}

std::vector<double> threshold_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start) || !(start >= 0.0)) {
    throw ValidationError("threshold grid needs 0 <= start <= stop and step > 0");
  }
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Round to 12 decimals so 0.1 steps print and compare cleanly.
    grid[i] = std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12;
  }
  return grid;
}

std::vector<double> parse_threshold_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad threshold grid '" + spec + "', expected start:stop:step");
    }
  }
  if (parts.size() == 1) return {parts[0]};
  if (parts.size() != 3) throw ValidationError("bad threshold grid '" + spec + "', expected start:stop:step");
  return threshold_grid(parts[0], parts[1], parts[2]);
}

std::vector<SweepRow> threshold_sweep(std::span<const MissionPlan> ranked, const FilterWeights& w,
                                      std::span<const double> thresholds, std::span<const Criterion> criteria,
                                      FilterRule rule) {
  if (thresholds.empty()) throw ValidationError("threshold sweep needs a non-empty grid");
  w.validate();
  const auto objectives = normalized_objectives(ranked, criteria);
  const std::vector<double> ref(criteria.size(), 1.0);
  const auto distances = plan_distance_matrix(ranked, w);

  std::map<std::vector<std::size_t>, double> cache;
  std::vector<SweepRow> rows;
  rows.reserve(thresholds.size());
  for (double t : thresholds) {
    const auto kept = filter_by_distances(distances, ranked.size(), t, rule);
    auto it = cache.find(kept);
    if (it == cache.end()) {
      std::vector<Point> pts;
      pts.reserve(kept.size());
      for (auto i : kept) pts.push_back(objectives[i]);
      it = cache.emplace(kept, hypervolume(pts, ref)).first;
    }
    rows.push_back({t, kept.size(), it->second});
  }
  return rows;
}

}  // namespace uavdss
