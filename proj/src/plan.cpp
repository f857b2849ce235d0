#include "uavdss/plan.hpp"

#include <cmath>

#include "uavdss/error.hpp"

namespace uavdss {

bool MissionPlan::performs(const TaskUav& key) const {
  auto it = task_uavs.find(key.task);
  return it != task_uavs.end() && it->second.count(key.uav) > 0;
}

void MissionPlan::validate() const {
  const auto check = [&](const auto& family, const char* name) {
    for (const auto& [key, _] : family) {
      if (!performs(key)) {
        throw ValidationError("plan '" + id + "': " + name + " entry for (" + key.task + ", " + key.uav +
                              ") without a matching assignment");
      }
    }
  };
  check(orders, "order");
  check(path_profiles, "path profile");
  check(sensors, "sensor");
}

void FilterWeights::validate() const {
  for (double x : {uav, order, gcs, path, ret, sensor}) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw ValidationError("filter weights must be finite and nonnegative");
  }
  if (uav + order + gcs + path + ret + sensor == 0.0) throw ValidationError("filter weights are all zero");
}

namespace {

std::set<TaskUav> pairs_of(const MissionPlan& p) {
  std::set<TaskUav> out;
  for (const auto& [task, uavs] : p.task_uavs) {
    for (const auto& u : uavs) out.insert({task, u});
  }
  return out;
}

// Entries whose key exists in both maps but whose values differ.
template <class Map>
int shared_mismatches(const Map& a, const Map& b) {
  int count = 0;
  for (const auto& [key, value] : a) {
    auto it = b.find(key);
    if (it != b.end() && !(it->second == value)) ++count;
  }
  return count;
}

}  // namespace

PlanDeltas plan_deltas(const MissionPlan& a, const MissionPlan& b) {
  PlanDeltas d;
  const auto pa = pairs_of(a);
  const auto pb = pairs_of(b);
  for (const auto& key : pa) d.uav += pb.count(key) == 0 ? 1 : 0;
  for (const auto& key : pb) d.uav += pa.count(key) == 0 ? 1 : 0;
  d.order = shared_mismatches(a.orders, b.orders);
  d.gcs = shared_mismatches(a.gcs_assign, b.gcs_assign);
  d.path = shared_mismatches(a.path_profiles, b.path_profiles);
  d.ret = shared_mismatches(a.return_profiles, b.return_profiles);
  d.sensor = shared_mismatches(a.sensors, b.sensors);
  return d;
}

double plan_distance(const MissionPlan& a, const MissionPlan& b, const FilterWeights& w) {
  const auto d = plan_deltas(a, b);
  return w.uav * d.uav + w.order * d.order + w.gcs * d.gcs + w.path * d.path + w.ret * d.ret + w.sensor * d.sensor;
}

std::vector<double> plan_distance_matrix(std::span<const MissionPlan> plans, const FilterWeights& w) {
  const std::size_t n = plans.size();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out[i * n + j] = out[j * n + i] = plan_distance(plans[i], plans[j], w);
    }
  }
  return out;
}

FilterRule parse_filter_rule(std::string_view name) {
  if (name == "pairwise") return FilterRule::Pairwise;
  if (name == "greedy") return FilterRule::Greedy;
  throw ValidationError("unknown filter rule '" + std::string(name) + "' (pairwise or greedy)");
}

std::string_view filter_rule_name(FilterRule rule) { return rule == FilterRule::Pairwise ? "pairwise" : "greedy"; }

std::vector<std::size_t> filter_by_distances(std::span<const double> distances, std::size_t n, double threshold,
                                             FilterRule rule) {
  if (!(threshold >= 0.0)) throw ValidationError("filter threshold must be nonnegative");
  if (distances.size() != n * n) throw ValidationError("distance matrix has the wrong size");
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    bool distinct = true;
    if (rule == FilterRule::Pairwise) {
      for (std::size_t k = 0; k < i && distinct; ++k) distinct = distances[i * n + k] > threshold;
    } else {
      for (std::size_t k = 0; k < kept.size() && distinct; ++k) distinct = distances[i * n + kept[k]] > threshold;
    }
    if (distinct) kept.push_back(i);
  }
  return kept;
}

std::vector<std::size_t> filter_plan_indices(std::span<const MissionPlan> ranked, const FilterWeights& w,
                                             double threshold, FilterRule rule) {
  w.validate();
  return filter_by_distances(plan_distance_matrix(ranked, w), ranked.size(), threshold, rule);
}

std::vector<MissionPlan> filter_plans(std::span<const MissionPlan> ranked, const FilterWeights& w, double threshold,
                                      FilterRule rule) {
  std::vector<MissionPlan> out;
  for (auto i : filter_plan_indices(ranked, w, threshold, rule)) out.push_back(ranked[i]);
  return out;
}

}  // namespace uavdss
