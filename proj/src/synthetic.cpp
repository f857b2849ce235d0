#include "uavdss/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "uavdss/error.hpp"

namespace uavdss {

const std::vector<MissionShape>& reference_shapes() {
  static const std::vector<MissionShape> shapes = {
      {6, 1, 3, 1, 17},  {6, 1, 4, 2, 5},   {8, 2, 5, 2, 38},  {9, 2, 5, 2, 9},
      {9, 2, 6, 2, 5},   {10, 2, 6, 2, 18}, {11, 3, 6, 2, 3},  {12, 3, 7, 3, 11},
      {12, 3, 8, 3, 5},  {13, 4, 7, 3, 4},  {14, 4, 8, 3, 5},  {16, 5, 10, 3, 8},
  };
  return shapes;
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng); }

int pick(std::mt19937_64& rng, int n) {
  return std::min(n - 1, static_cast<int>(unit_uniform(rng) * n));
}

std::string label(const char* prefix, int i) { return prefix + std::to_string(i + 1); }

// Editable form of a plan: crews per task, routes per UAV.
struct Draft {
  std::vector<std::vector<int>> crew;         // task -> UAVs
  std::map<std::pair<int, int>, int> path;    // (task, uav) -> profile
  std::map<std::pair<int, int>, int> sensor;  // (task, uav) -> sensor
  std::vector<std::vector<int>> route;        // uav -> tasks in visiting order
  std::vector<int> gcs;                       // uav -> GCS
  std::vector<int> ret;                       // uav -> return profile
};

constexpr int kNumProfiles = 3;
constexpr int kNumSensors = 4;

Draft random_draft(const MissionShape& shape, std::mt19937_64& rng) {
  Draft d;
  d.route.resize(shape.uavs);
  d.gcs.resize(shape.uavs);
  d.ret.resize(shape.uavs);
  for (int u = 0; u < shape.uavs; ++u) {
    d.gcs[u] = pick(rng, shape.gcss);
    d.ret[u] = pick(rng, kNumProfiles);
  }
  for (int t = 0; t < shape.tasks; ++t) {
    const int crew = (t < shape.multi_uav_tasks && shape.uavs >= 2) ? 2 : 1;
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < crew) {
      const int u = pick(rng, shape.uavs);
      if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) chosen.push_back(u);
    }
    for (int u : chosen) {
      d.route[u].push_back(t);
      d.path[{t, u}] = pick(rng, kNumProfiles);
      d.sensor[{t, u}] = pick(rng, kNumSensors);
    }
    d.crew.push_back(std::move(chosen));
  }
  return d;
}

// One small edit, the kind of variation seen between neighbouring knee points.
void mutate(Draft& d, const MissionShape& shape, std::mt19937_64& rng) {
  switch (pick(rng, 6)) {
    case 0: {  // hand a task over to another UAV
      const int t = pick(rng, shape.tasks);
      auto& crew = d.crew[t];
      const int slot = pick(rng, static_cast<int>(crew.size()));
      const int from = crew[slot];
      const int to = pick(rng, shape.uavs);
      if (std::find(crew.begin(), crew.end(), to) != crew.end()) return;
      crew[slot] = to;
      auto& r = d.route[from];
      r.erase(std::find(r.begin(), r.end(), t));
      d.route[to].push_back(t);
      d.path[{t, to}] = d.path[{t, from}];
      d.sensor[{t, to}] = d.sensor[{t, from}];
      d.path.erase({t, from});
      d.sensor.erase({t, from});
      return;
    }
    case 1: {  // swap two consecutive tasks of a route
      auto& r = d.route[pick(rng, shape.uavs)];
      if (r.size() < 2) return;
      const int i = pick(rng, static_cast<int>(r.size()) - 1);
      std::swap(r[i], r[i + 1]);
      return;
    }
    case 2: {
      auto it = std::next(d.path.begin(), pick(rng, static_cast<int>(d.path.size())));
      it->second = pick(rng, kNumProfiles);
      return;
    }
    case 3: {
      auto it = std::next(d.sensor.begin(), pick(rng, static_cast<int>(d.sensor.size())));
      it->second = pick(rng, kNumSensors);
      return;
    }
    case 4:
      d.gcs[pick(rng, shape.uavs)] = pick(rng, shape.gcss);
      return;
    default:
      d.ret[pick(rng, shape.uavs)] = pick(rng, kNumProfiles);
      return;
  }
}

MissionPlan realize(const std::string& id, const Draft& d, std::mt19937_64& rng) {
  static const char* kProfiles[] = {"min", "mid", "max"};
  static const char* kSensors[] = {"mR", "sR", "iR", "eiS"};

  MissionPlan plan;
  plan.id = id;
  std::set<int> gcss;
  int fleet = 0;
  double path_effort = 0.0;
  for (std::size_t u = 0; u < d.route.size(); ++u) {
    if (d.route[u].empty()) continue;
    ++fleet;
    const std::string uav = label("U", static_cast<int>(u));
    for (std::size_t k = 0; k < d.route[u].size(); ++k) {
      const int t = d.route[u][k];
      const TaskUav key{label("T", t), uav};
      const int profile = d.path.at({t, static_cast<int>(u)});
      plan.task_uavs[key.task].insert(uav);
      plan.orders[key] = static_cast<int>(k) + 1;
      plan.path_profiles[key] = kProfiles[profile];
      plan.sensors[key] = kSensors[d.sensor.at({t, static_cast<int>(u)})];
      path_effort += 1.0 + 0.25 * profile;
    }
    plan.gcs_assign[uav] = label("G", d.gcs[u]);
    plan.return_profiles[uav] = kProfiles[d.ret[u]];
    gcss.insert(d.gcs[u]);
  }

  const double n_uavs = static_cast<double>(fleet);
  plan.criteria["makespan"] = (0.15 + 0.2 * unit_uniform(rng)) * path_effort / std::sqrt(n_uavs) + 0.2;
  plan.criteria["flight_time"] = plan.criteria["makespan"] * n_uavs * uniform(rng, 0.6, 1.0);
  plan.criteria["distance"] = plan.criteria["flight_time"] * uniform(rng, 70.0, 110.0);
  plan.criteria["fuel"] = plan.criteria["distance"] * uniform(rng, 0.08, 0.14);
  plan.criteria["cost"] = 40.0 * n_uavs + 60.0 * static_cast<double>(gcss.size()) + uniform(rng, 0.0, 80.0);
  for (const char* risk : {"risk_fuel_usage", "risk_distance_ground", "risk_distance_uavs", "risk_out_of_coverage"}) {
    plan.criteria[risk] = uniform(rng, 0.01, 0.6);
  }
  plan.criteria["num_uavs"] = n_uavs;
  plan.criteria["num_gcss"] = static_cast<double>(gcss.size());
  return plan;
}

}  // namespace

MissionDataset generate_mission(const std::string& id, const MissionShape& shape, std::uint64_t seed) {
  if (shape.tasks < 1 || shape.uavs < 1 || shape.gcss < 1 || shape.solutions < 1 || shape.multi_uav_tasks < 0 ||
      shape.multi_uav_tasks > shape.tasks) {
    throw ValidationError("invalid mission shape");
  }
  std::mt19937_64 rng(seed);
  MissionDataset ds;
  ds.id = id;
  ds.meta = {shape.tasks, shape.multi_uav_tasks, shape.uavs, shape.gcss};
  std::vector<Draft> drafts;
  int attempts = 0;
  while (static_cast<int>(ds.plans.size()) < shape.solutions) {
    if (++attempts > 1000 * shape.solutions) throw Error("cannot generate enough distinct plans for " + id);
    Draft draft;
    if (drafts.empty()) {
      draft = random_draft(shape, rng);
    } else {
      // descend from an earlier plan through a few edits
      draft = drafts[pick(rng, static_cast<int>(drafts.size()))];
      const int edits = 1 + pick(rng, 4);
      for (int e = 0; e < edits; ++e) mutate(draft, shape, rng);
    }
    char pid[16];
    std::snprintf(pid, sizeof pid, "p%02zu", ds.plans.size() + 1);
    MissionPlan candidate = realize(pid, draft, rng);
    const bool duplicate = std::any_of(ds.plans.begin(), ds.plans.end(),
                                       [&](const MissionPlan& p) { return plan_distance(p, candidate) == 0.0; });
    if (!duplicate) {
      ds.plans.push_back(std::move(candidate));
      drafts.push_back(std::move(draft));
    }
  }
  return ds;
}

std::vector<MissionDataset> generate_reference_missions(std::uint64_t seed) {
  std::vector<MissionDataset> out;
  const auto& shapes = reference_shapes();
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    char id[32];
    std::snprintf(id, sizeof id, "dataset-%02zu", i + 1);
    out.push_back(generate_mission(id, shapes[i], seed + 1000003ULL * (i + 1)));
  }
  return out;
}

std::vector<Decision> simulate_decisions(const std::vector<MissionDataset>& missions, int operators,
                                         std::uint64_t seed, double noise) {
  if (operators < 1) throw ValidationError("need at least one operator");
  std::mt19937_64 rng(seed);
  const auto& criteria = mission_criteria();
  std::vector<Decision> out;
  for (int op = 0; op < operators; ++op) {
    const std::string operator_id = label("op", op);
    for (const auto& profile : builtin_profiles()) {
      const auto w = crisp_weights(profile, criteria).aligned(criteria);
      for (const auto& ds : missions) {
        const DecisionMatrix m = to_decision_matrix(ds, criteria);
        std::size_t best = 0;
        double best_utility = 0.0;
        for (std::size_t a = 0; a < m.num_alternatives(); ++a) {
          double utility = 0.0;
          for (std::size_t c = 0; c < m.num_criteria(); ++c) {
            const auto col = m.column(c);
            const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
            if (*hi > *lo) utility += w[c] * (m(a, c) - *lo) / (*hi - *lo);
          }
          utility += noise * (2.0 * unit_uniform(rng) - 1.0);
          if (a == 0 || utility < best_utility) {
            best = a;
            best_utility = utility;
          }
        }
        out.push_back({operator_id, profile.name, ds.id, m.alternatives()[best], ""});
      }
    }
  }
  return out;
}

}  // namespace uavdss
