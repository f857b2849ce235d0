#include <algorithm>
#include <cmath>

#include "uavdss/crisp_methods.hpp"
#include "uavdss/error.hpp"
#include "uavdss/normalize.hpp"

namespace uavdss {

Ranking vikor(const DecisionMatrix& m, const WeightVector& w, double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError("vikor: v outside [0, 1]");
  const auto weights = w.aligned(m.criteria());
  const std::size_t n = m.num_alternatives();
  std::vector<double> s(n, 0.0);
  std::vector<double> r(n, 0.0);
  std::vector<std::string> degenerate;

  for (std::size_t f = 0; f < m.num_criteria(); ++f) {
    const auto col = m.column(f);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    const double best = m.maximized(f) ? *hi : *lo;
    const double worst = m.maximized(f) ? *lo : *hi;
    if (best == worst) {
      degenerate.push_back(m.criteria()[f].id);
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double term = weights[f] * (best - col[k]) / (best - worst);
      s[k] += term;
      r[k] = std::max(r[k], term);
    }
  }

  const auto [s_best, s_worst] = std::minmax_element(s.begin(), s.end());
  const auto [r_best, r_worst] = std::minmax_element(r.begin(), r.end());
  const double s_span = *s_worst - *s_best;
  const double r_span = *r_worst - *r_best;
  std::vector<double> q(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double s_term = s_span > 0.0 ? (s[k] - *s_best) / s_span : 0.0;
    const double r_term = r_span > 0.0 ? (r[k] - *r_best) / r_span : 0.0;
    q[k] = v * s_term + (1.0 - v) * r_term;
  }

  auto out = rank_by_score("vikor", m.alternatives(), q, Sense::LowerIsBetter);
  out.metadata["v"] = v;
  out.metadata["S"] = s;
  out.metadata["R"] = r;
  out.metadata["Q"] = q;
  out.metadata["degenerate_criteria"] = degenerate;
  return out;
}

Ranking topsis(const DecisionMatrix& m, const WeightVector& w, Normalization norm) {
  const auto weights = w.aligned(m.criteria());
  const auto r = norm == Normalization::Vector ? vector_normalize(m) : linear_normalize(m);
  const std::size_t n = r.rows;
  const std::size_t k = r.cols;

  std::vector<double> weighted(n * k);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t f = 0; f < k; ++f) weighted[s * k + f] = weights[f] * r(s, f);
  }

  std::vector<double> ideal(k);
  std::vector<double> anti(k);
  for (std::size_t f = 0; f < k; ++f) {
    double lo = weighted[f];
    double hi = weighted[f];
    for (std::size_t s = 1; s < n; ++s) {
      lo = std::min(lo, weighted[s * k + f]);
      hi = std::max(hi, weighted[s * k + f]);
    }
    const bool larger_better = r.benefit_oriented || m.maximized(f);
    ideal[f] = larger_better ? hi : lo;
    anti[f] = larger_better ? lo : hi;
  }

  std::vector<double> d_plus(n, 0.0);
  std::vector<double> d_minus(n, 0.0);
  std::vector<double> closeness(n, 0.5);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t f = 0; f < k; ++f) {
      const double x = weighted[s * k + f];
      d_plus[s] += (x - ideal[f]) * (x - ideal[f]);
      d_minus[s] += (x - anti[f]) * (x - anti[f]);
    }
    d_plus[s] = std::sqrt(d_plus[s]);
    d_minus[s] = std::sqrt(d_minus[s]);
    const double denom = d_plus[s] + d_minus[s];
    if (denom > 0.0) closeness[s] = d_minus[s] / denom;
  }

  const bool vector = norm == Normalization::Vector;
  auto out = rank_by_score(vector ? "topsis_vector" : "topsis_linear", m.alternatives(), closeness,
                           Sense::HigherIsBetter);
  out.metadata["normalization"] = vector ? "vector" : "linear";
  out.metadata["d_plus"] = d_plus;
  out.metadata["d_minus"] = d_minus;
  return out;
}

}  // namespace uavdss
