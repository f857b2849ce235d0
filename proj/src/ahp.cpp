#include <algorithm>
#include <cmath>
#include <sstream>

#include "uavdss/crisp_methods.hpp"
#include "uavdss/error.hpp"

namespace uavdss {

std::vector<double> principal_eigenvector(const SquareMatrix<double>& a, double tol, int max_iterations) {
  const std::size_t n = a.size();
  if (n == 0) throw DomainError("principal_eigenvector: empty matrix");
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  double delta = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * x[j];
      next[i] = acc;
      total += acc;
    }
    if (!(total > 0.0) || !std::isfinite(total)) {
      throw NumericalError("principal_eigenvector: iterate collapsed (sum " + std::to_string(total) + ")");
    }
    delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= total;
      delta = std::max(delta, std::abs(next[i] - x[i]));
    }
    x.swap(next);
    if (delta < tol) return x;
  }
  std::ostringstream msg;
  msg << "principal_eigenvector: no convergence after " << max_iterations << " iterations (last max-norm step "
      << delta << ", n = " << n << ")";
  throw NumericalError(msg.str());
}

int ahp_scale_value(double va, double vb, double range) {
  if (!(range > 0.0) || va == vb) return 1;
  const double advantage = std::min(1.0, std::abs(va - vb) / range);
  return 1 + static_cast<int>(std::lround(8.0 * advantage));
}

SquareMatrix<double> ahp_alternative_matrix(const DecisionMatrix& m, std::size_t criterion) {
  const auto col = m.column(criterion);
  const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
  const double range = *hi - *lo;
  const bool maximize = m.maximized(criterion);
  const std::size_t n = col.size();
  SquareMatrix<double> a(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double value = ahp_scale_value(col[i], col[j], range);
      const bool i_better = maximize ? col[i] > col[j] : col[i] < col[j];
      a(i, j) = i_better ? value : 1.0 / value;
      a(j, i) = 1.0 / a(i, j);
    }
  }
  return a;
}

SquareMatrix<double> ahp_criteria_matrix(std::span<const ImportanceDegree> degrees) {
  SquareMatrix<double> a(degrees.size(), 1.0);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      a(i, j) = static_cast<double>(degrees[i]) / static_cast<double>(degrees[j]);
    }
  }
  return a;
}

AhpPriorities ahp_priorities(const SquareMatrix<double>& criteria_matrix,
                             std::span<const SquareMatrix<double>> alternative_matrices) {
  if (alternative_matrices.size() != criteria_matrix.size()) {
    throw ValidationError("ahp: one alternative matrix per criterion required");
  }
  AhpPriorities out;
  out.criteria = principal_eigenvector(criteria_matrix);
  const std::size_t n_alt = alternative_matrices.empty() ? 0 : alternative_matrices.front().size();
  out.global.assign(n_alt, 0.0);
  for (std::size_t f = 0; f < alternative_matrices.size(); ++f) {
    if (alternative_matrices[f].size() != n_alt) throw ValidationError("ahp: alternative matrices differ in size");
    out.local.push_back(principal_eigenvector(alternative_matrices[f]));
    for (std::size_t s = 0; s < n_alt; ++s) out.global[s] += out.criteria[f] * out.local.back()[s];
  }
  return out;
}

Ranking ahp(const DecisionMatrix& m, const OperatorProfile& profile) {
  if (m.num_alternatives() < 2) throw DomainError("ahp: at least two alternatives required");
  const auto degrees = aligned_degrees(profile, m.criteria());
  std::vector<SquareMatrix<double>> alternatives;
  alternatives.reserve(m.num_criteria());
  for (std::size_t f = 0; f < m.num_criteria(); ++f) alternatives.push_back(ahp_alternative_matrix(m, f));
  const auto priorities = ahp_priorities(ahp_criteria_matrix(degrees), alternatives);

  auto out = rank_by_score("ahp", m.alternatives(), priorities.global, Sense::HigherIsBetter);
  out.metadata["criteria_priorities"] = priorities.criteria;
  out.metadata["aggregation"] = "additive";
  return out;
}

}  // namespace uavdss
