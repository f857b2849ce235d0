#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uavdss/dataset.hpp"
#include "uavdss/evaluation.hpp"

namespace uavdss {

/// Size of a generated mission.
struct MissionShape {
  int tasks = 6;
  int multi_uav_tasks = 1;
  int uavs = 3;
  int gcss = 1;
  int solutions = 17;
};

/// The twelve mission shapes of the reference experiment, in dataset order.
const std::vector<MissionShape>& reference_shapes();

/// Uniform double in [0, 1) built from the top 53 bits, so streams are
/// identical on every standard library.
double unit_uniform(std::mt19937_64& rng);

/// Random plan set with the given shape. Plans are pairwise distinct in
/// assignment space; criteria are strictly positive with risks in [0.01, 0.6],
/// num_uavs and num_gcss match the assignments.
MissionDataset generate_mission(const std::string& id, const MissionShape& shape, std::uint64_t seed);

/// One mission per reference shape, ids dataset-01 .. dataset-12.
std::vector<MissionDataset> generate_reference_missions(std::uint64_t seed);

/// Simulated operators: each picks the plan with the lowest profile-weighted
/// sum of min-max normalized criteria, perturbed by per-operator noise.
/// One decision per (operator, profile, mission).
std::vector<Decision> simulate_decisions(const std::vector<MissionDataset>& missions, int operators,
                                         std::uint64_t seed, double noise = 0.05);

}  // namespace uavdss
