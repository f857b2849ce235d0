#include <cmath>

#include "uavdss/crisp_methods.hpp"
#include "uavdss/error.hpp"
#include "uavdss/normalize.hpp"

namespace uavdss {
namespace {

std::vector<double> weighted_sums(const NormalizedMatrix& r, std::span<const double> w) {
  std::vector<double> out(r.rows, 0.0);
  for (std::size_t s = 0; s < r.rows; ++s) {
    for (std::size_t f = 0; f < r.cols; ++f) out[s] += w[f] * r(s, f);
  }
  return out;
}

std::vector<double> weighted_products(const NormalizedMatrix& r, std::span<const double> w,
                                      const DecisionMatrix& m) {
  std::vector<double> out(r.rows, 1.0);
  for (std::size_t s = 0; s < r.rows; ++s) {
    for (std::size_t f = 0; f < r.cols; ++f) {
      if (!(r(s, f) > 0.0)) {
        throw DomainError("multiplicative aggregation: zero normalized value for '" + m.alternatives()[s] +
                          "' on criterion '" + m.criteria()[f].id + "'");
      }
      out[s] *= std::pow(r(s, f), w[f]);
    }
  }
  return out;
}

void require_positive(const DecisionMatrix& m, const char* method) {
  for (std::size_t s = 0; s < m.num_alternatives(); ++s) {
    for (std::size_t f = 0; f < m.num_criteria(); ++f) {
      if (!(m(s, f) > 0.0)) {
        throw DomainError(std::string(method) + ": nonpositive value for '" + m.alternatives()[s] +
                          "' on criterion '" + m.criteria()[f].id + "'");
      }
    }
  }
}

}  // namespace

Ranking wsm(const DecisionMatrix& m, const WeightVector& w) {
  const auto weights = w.aligned(m.criteria());
  const auto scores = weighted_sums(linear_normalize(m), weights);
  auto out = rank_by_score("wsm", m.alternatives(), scores, Sense::HigherIsBetter);
  out.metadata["normalization"] = "linear";
  return out;
}

Ranking wpm(const DecisionMatrix& m, const WeightVector& w) {
  require_positive(m, "wpm");
  const auto weights = w.aligned(m.criteria());
  const auto scores = weighted_products(linear_normalize(m), weights, m);
  auto out = rank_by_score("wpm", m.alternatives(), scores, Sense::HigherIsBetter);
  out.metadata["normalization"] = "linear";
  return out;
}

Ranking waspas(const DecisionMatrix& m, const WeightVector& w, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("waspas: lambda outside [0, 1]");
  const auto weights = w.aligned(m.criteria());
  const auto r = linear_normalize(m);
  const auto additive = weighted_sums(r, weights);
  std::vector<double> multiplicative(r.rows, 0.0);
  if (lambda < 1.0) multiplicative = weighted_products(r, weights, m);

  std::vector<double> q(r.rows);
  for (std::size_t s = 0; s < r.rows; ++s) q[s] = lambda * additive[s] + (1.0 - lambda) * multiplicative[s];

  auto out = rank_by_score("waspas", m.alternatives(), q, Sense::HigherIsBetter);
  out.metadata["lambda"] = lambda;
  out.metadata["normalization"] = "linear";
  out.metadata["wsm"] = additive;
  out.metadata["wpm"] = multiplicative;
  return out;
}

}  // namespace uavdss
