#include <algorithm>
#include <cmath>

#include "uavdss/crisp_methods.hpp"
#include "uavdss/error.hpp"

namespace uavdss {

std::vector<ElectreThreshold> ElectreThresholds::aligned(std::span<const Criterion> criteria) const {
  std::vector<ElectreThreshold> out;
  out.reserve(criteria.size());
  for (const auto& c : criteria) {
    auto it = by_criterion.find(c.id);
    if (it == by_criterion.end()) throw ValidationError("no ELECTRE thresholds for criterion '" + c.id + "'");
    const auto& t = it->second;
    if (!(t.q >= 0.0 && t.q <= t.p && t.p <= t.v)) {
      throw ValidationError("ELECTRE thresholds for '" + c.id + "' violate 0 <= q <= p <= v");
    }
    out.push_back(t);
  }
  return out;
}

const ElectreThresholds& mission_electre_thresholds() {
  static const ElectreThresholds thresholds{{
      {"cost", {0.5, 5.0, 50.0}},
      {"distance", {0.5, 5.0, 50.0}},
      {"flight_time", {0.01, 0.5, 1.5}},
      {"fuel", {0.5, 7.0, 50.0}},
      {"makespan", {0.005, 0.3, 1.0}},
      {"num_gcss", {0.0, 1.0, 2.0}},
      {"num_uavs", {0.0, 1.0, 4.0}},
      {"risk_distance_ground", {0.001, 0.1, 0.5}},
      {"risk_distance_uavs", {0.001, 0.1, 0.5}},
      {"risk_fuel_usage", {0.001, 0.1, 0.5}},
      {"risk_out_of_coverage", {0.001, 0.1, 0.5}},
  }};
  return thresholds;
}

double electre_discrimination(double lambda) { return 0.3 - 0.15 * lambda; }

namespace {

double partial_concordance(double advantage_of_b, const ElectreThreshold& t) {
  if (advantage_of_b <= t.q) return 1.0;
  if (advantage_of_b >= t.p) return 0.0;
  return (t.p - advantage_of_b) / (t.p - t.q);
}

double partial_discordance(double advantage_of_b, const ElectreThreshold& t) {
  if (advantage_of_b <= t.p) return 0.0;
  if (advantage_of_b >= t.v) return 1.0;
  return (advantage_of_b - t.p) / (t.v - t.p);
}

// Classes extracted in order: best first when descending, worst first otherwise.
std::vector<std::vector<std::size_t>> distill(const SquareMatrix<double>& s, bool descending) {
  const std::size_t n = s.size();
  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;

  std::vector<std::vector<std::size_t>> classes;
  while (!remaining.empty()) {
    std::vector<std::size_t> d = remaining;
    double lambda = 0.0;
    for (auto a : d) {
      for (auto b : d) {
        if (a != b) lambda = std::max(lambda, s(a, b));
      }
    }

    while (d.size() > 1) {
      const double disc = electre_discrimination(lambda);
      std::vector<int> qualification(d.size(), 0);
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.size(); ++j) {
          if (i == j) continue;
          const double sab = s(d[i], d[j]);
          const double sba = s(d[j], d[i]);
          if (sab > lambda - disc && sab - sba > disc) {
            ++qualification[i];
            --qualification[j];
          }
        }
      }
      const int extreme = descending ? *std::max_element(qualification.begin(), qualification.end())
                                     : *std::min_element(qualification.begin(), qualification.end());
      std::vector<std::size_t> kept;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (qualification[i] == extreme) kept.push_back(d[i]);
      }
      d = std::move(kept);
      if (lambda <= 0.0) break;

      const double cut = lambda - disc;
      double next = 0.0;
      for (auto a : d) {
        for (auto b : d) {
          if (a != b && s(a, b) < cut) next = std::max(next, s(a, b));
        }
      }
      lambda = next;
    }

    classes.push_back(d);
    std::erase_if(remaining, [&](std::size_t x) { return std::find(d.begin(), d.end(), x) != d.end(); });
  }
  return classes;
}

}  // namespace

SquareMatrix<double> electre_credibility(const DecisionMatrix& m, const WeightVector& w,
                                         const ElectreThresholds& t) {
  const auto weights = w.aligned(m.criteria());
  const auto thresholds = t.aligned(m.criteria());
  double total = 0.0;
  for (double x : weights) total += x;
  if (!(total > 0.0)) throw ValidationError("electre3: weights sum to zero");

  const std::size_t n = m.num_alternatives();
  const std::size_t k = m.num_criteria();
  SquareMatrix<double> s(n, 1.0);
  std::vector<double> discordance(k);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      double concordance = 0.0;
      for (std::size_t f = 0; f < k; ++f) {
        const double advantage = m.maximized(f) ? m(b, f) - m(a, f) : m(a, f) - m(b, f);
        concordance += weights[f] * partial_concordance(advantage, thresholds[f]);
        discordance[f] = partial_discordance(advantage, thresholds[f]);
      }
      concordance /= total;
      double credibility = concordance;
      for (std::size_t f = 0; f < k; ++f) {
        if (discordance[f] > concordance) credibility *= (1.0 - discordance[f]) / (1.0 - concordance);
      }
      s(a, b) = credibility;
    }
  }
  return s;
}

ElectreDistillation electre_distill(const SquareMatrix<double>& credibility) {
  const std::size_t n = credibility.size();
  ElectreDistillation out{std::vector<int>(n, 0), std::vector<int>(n, 0)};

  const auto down = distill(credibility, true);
  for (std::size_t c = 0; c < down.size(); ++c) {
    for (auto a : down[c]) out.descending[a] = static_cast<int>(c) + 1;
  }
  const auto up = distill(credibility, false);
  for (std::size_t c = 0; c < up.size(); ++c) {
    for (auto a : up[c]) out.ascending[a] = static_cast<int>(up.size() - c);
  }
  return out;
}

Ranking electre3(const DecisionMatrix& m, const WeightVector& w, const ElectreThresholds& t) {
  const auto credibility = electre_credibility(m, w, t);
  const auto distillation = electre_distill(credibility);
  const std::size_t n = m.num_alternatives();

  std::vector<double> mean_rank(n);
  for (std::size_t a = 0; a < n; ++a) {
    mean_rank[a] = 0.5 * (distillation.descending[a] + distillation.ascending[a]);
  }
  auto out = rank_by_score("electre3", m.alternatives(), mean_rank, Sense::LowerIsBetter);

  nlohmann::json matrix = nlohmann::json::array();
  for (std::size_t a = 0; a < n; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t b = 0; b < n; ++b) row.push_back(credibility(a, b));
    matrix.push_back(std::move(row));
  }
  nlohmann::json incomparable = nlohmann::json::array();
  const auto& d = distillation.descending;
  const auto& u = distillation.ascending;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if ((d[a] < d[b] && u[a] > u[b]) || (d[a] > d[b] && u[a] < u[b])) {
        incomparable.push_back({m.alternatives()[a], m.alternatives()[b]});
      }
    }
  }
  out.metadata["credibility"] = std::move(matrix);
  out.metadata["descending_preorder"] = d;
  out.metadata["ascending_preorder"] = u;
  out.metadata["incomparable"] = std::move(incomparable);
  out.metadata["discrimination"] = "s(lambda) = 0.3 - 0.15 lambda";
  out.metadata["linearization"] = "mean of descending and ascending class ranks";
  return out;
}

}  // namespace uavdss
