#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "uavdss/crisp_methods.hpp"
#include "uavdss/error.hpp"
#include "uavdss/normalize.hpp"

namespace uavdss {

Ranking dominance_aggregate(std::string method, std::span<const std::string> ids,
                            const std::array<std::vector<int>, 3>& sub_ranks) {
  const std::size_t n = ids.size();
  for (const auto& r : sub_ranks) {
    if (r.size() != n) throw ValidationError("dominance_aggregate: sub-ranking size mismatch");
  }
  std::vector<int> dominated(n, 0);
  std::vector<int> rank_sum(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    rank_sum[a] = sub_ranks[0][a] + sub_ranks[1][a] + sub_ranks[2][a];
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      bool all_le = true;
      bool any_lt = false;
      for (const auto& r : sub_ranks) {
        all_le = all_le && r[a] <= r[b];
        any_lt = any_lt || r[a] < r[b];
      }
      if (all_le && any_lt) ++dominated[a];
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto key = [&](std::size_t a) { return std::tuple(-dominated[a], rank_sum[a], sub_ranks[0][a]); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

  std::vector<double> scores(dominated.begin(), dominated.end());
  auto out = rank_by_order(std::move(method), ids, order,
                           [&](std::size_t a, std::size_t b) { return key(a) == key(b); }, scores);
  out.metadata["dominated_count"] = dominated;
  out.metadata["rank_sum"] = rank_sum;
  return out;
}

Ranking multimoora(const DecisionMatrix& m, const WeightVector& w) {
  const auto weights = w.aligned(m.criteria());
  const auto r = vector_normalize(m);
  const std::size_t n = r.rows;
  const std::size_t k = r.cols;

  std::vector<double> ratio(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t f = 0; f < k; ++f) ratio[s] += (m.maximized(f) ? 1.0 : -1.0) * weights[f] * r(s, f);
  }

  std::vector<double> reference(k);
  for (std::size_t f = 0; f < k; ++f) {
    reference[f] = r(0, f);
    for (std::size_t s = 1; s < n; ++s) {
      reference[f] = m.maximized(f) ? std::max(reference[f], r(s, f)) : std::min(reference[f], r(s, f));
    }
  }
  std::vector<double> deviation(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t f = 0; f < k; ++f) {
      deviation[s] = std::max(deviation[s], std::abs(weights[f] * reference[f] - weights[f] * r(s, f)));
    }
  }

  std::vector<double> utility(n, 1.0);
  for (std::size_t s = 0; s < n; ++s) {
    double numerator = 1.0;
    double denominator = 1.0;
    for (std::size_t f = 0; f < k; ++f) {
      const double v = m(s, f);
      if (!(v > 0.0)) {
        throw DomainError("multimoora: multiplicative form needs positive values ('" + m.alternatives()[s] +
                          "', criterion '" + m.criteria()[f].id + "')");
      }
      (m.maximized(f) ? numerator : denominator) *= v;
    }
    utility[s] = numerator / denominator;
  }

  const std::array<std::vector<int>, 3> sub = {
      competition_ranks(ratio, Sense::HigherIsBetter),
      competition_ranks(deviation, Sense::LowerIsBetter),
      competition_ranks(utility, Sense::HigherIsBetter),
  };
  auto out = dominance_aggregate("multimoora", m.alternatives(), sub);
  out.metadata["ratio_system"] = {{"scores", ratio}, {"ranks", sub[0]}};
  out.metadata["reference_point"] = {{"scores", deviation}, {"ranks", sub[1]}};
  out.metadata["multiplicative"] = {{"scores", utility}, {"ranks", sub[2]}};
  return out;
}

std::vector<RimInterval> RimParams::aligned(std::span<const Criterion> criteria) const {
  std::vector<RimInterval> out;
  out.reserve(criteria.size());
  for (const auto& c : criteria) {
    auto it = by_criterion.find(c.id);
    if (it == by_criterion.end()) throw ValidationError("no RIM parameters for criterion '" + c.id + "'");
    const auto& p = it->second;
    if (!(p.a <= p.c && p.c <= p.d && p.d <= p.b)) {
      throw ValidationError("RIM parameters for '" + c.id + "' violate A <= C <= D <= B");
    }
    out.push_back(p);
  }
  return out;
}

RimParams rim_params_from_matrix(const DecisionMatrix& m, const ElectreThresholds& indifference) {
  const auto thresholds = indifference.aligned(m.criteria());
  RimParams params;
  for (std::size_t f = 0; f < m.num_criteria(); ++f) {
    const auto col = m.column(f);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    RimInterval in{*lo, *hi, *lo, *hi};
    if (m.maximized(f)) {
      in.c = std::max(*lo, *hi - thresholds[f].q);
      in.d = *hi;
    } else {
      in.c = *lo;
      in.d = std::min(*hi, *lo + thresholds[f].q);
    }
    params.by_criterion[m.criteria()[f].id] = in;
  }
  return params;
}

double rim_normalize(double value, const RimInterval& in) {
  if (value < in.a || value > in.b) throw DomainError("rim: value outside its range");
  if (value >= in.c && value <= in.d) return 1.0;
  const double gap = std::min(std::abs(value - in.c), std::abs(value - in.d));
  if (value < in.c) return 1.0 - gap / std::abs(in.a - in.c);
  return 1.0 - gap / std::abs(in.d - in.b);
}

Ranking rim(const DecisionMatrix& m, const WeightVector& w, const RimParams& params) {
  const auto weights = w.aligned(m.criteria());
  const auto intervals = params.aligned(m.criteria());
  const std::size_t n = m.num_alternatives();
  std::vector<double> index(n, 0.5);
  std::vector<double> i_plus(n, 0.0);
  std::vector<double> i_minus(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t f = 0; f < m.num_criteria(); ++f) {
      const double v = m(s, f);
      const auto& in = intervals[f];
      if (v < in.a || v > in.b) {
        throw DomainError("rim: value of '" + m.alternatives()[s] + "' on criterion '" + m.criteria()[f].id +
                          "' lies outside [A, B]");
      }
      const double y = weights[f] * rim_normalize(v, in);
      i_plus[s] += (y - weights[f]) * (y - weights[f]);
      i_minus[s] += y * y;
    }
    i_plus[s] = std::sqrt(i_plus[s]);
    i_minus[s] = std::sqrt(i_minus[s]);
    if (i_plus[s] + i_minus[s] > 0.0) index[s] = i_minus[s] / (i_plus[s] + i_minus[s]);
  }
  auto out = rank_by_score("rim", m.alternatives(), index, Sense::HigherIsBetter);
  out.metadata["I_plus"] = i_plus;
  out.metadata["I_minus"] = i_minus;
  return out;
}

}  // namespace uavdss
