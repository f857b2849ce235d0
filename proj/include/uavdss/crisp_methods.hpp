#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "uavdss/model.hpp"
#include "uavdss/ranking.hpp"
#include "uavdss/square_matrix.hpp"

namespace uavdss {

enum class Normalization { Vector, Linear };

// ---------------------------------------------------------------------------
// Additive / multiplicative scoring

/// Weighted sum over linearly normalized values, best first.
Ranking wsm(const DecisionMatrix& m, const WeightVector& w);

/// Weighted product over linearly normalized values. The ratio of two scores
/// equals the pairwise product P(a / b), so the order agrees with P >= 1.
Ranking wpm(const DecisionMatrix& m, const WeightVector& w);

/// Q = lambda * WSM + (1 - lambda) * WPM on linearly normalized values.
Ranking waspas(const DecisionMatrix& m, const WeightVector& w, double lambda = 0.5);

// ---------------------------------------------------------------------------
// AHP

/// Principal eigenvector of a positive matrix by power iteration, normalized
/// to sum 1. Stops when successive iterates differ by < 1e-9 in max-norm.
std::vector<double> principal_eigenvector(const SquareMatrix<double>& a, double tol = 1e-9,
                                          int max_iterations = 10000);

/// Saaty-scale value (1..9) of the better alternative over the worse, from the
/// advantage |va - vb| relative to the criterion range. Equal values give 1.
int ahp_scale_value(double va, double vb, double range);

/// Pairwise comparisons of all alternatives on one criterion.
SquareMatrix<double> ahp_alternative_matrix(const DecisionMatrix& m, std::size_t criterion);

/// A[i][j] = D(i) / D(j).
SquareMatrix<double> ahp_criteria_matrix(std::span<const ImportanceDegree> degrees);

struct AhpPriorities {
  std::vector<double> criteria;               ///< per criterion
  std::vector<std::vector<double>> local;     ///< [criterion][alternative]
  std::vector<double> global;                 ///< per alternative
};

AhpPriorities ahp_priorities(const SquareMatrix<double>& criteria_matrix,
                             std::span<const SquareMatrix<double>> alternative_matrices);

Ranking ahp(const DecisionMatrix& m, const OperatorProfile& profile);

// ---------------------------------------------------------------------------
// VIKOR

/// Ascending Q ranking. Metadata carries S, R, Q and degenerate criteria.
Ranking vikor(const DecisionMatrix& m, const WeightVector& w, double v = 0.5);

// ---------------------------------------------------------------------------
// TOPSIS

/// Descending closeness d- / (d+ + d-). With linear normalization the ideal is
/// the column maximum of the weighted values; with vector normalization it
/// follows each criterion's direction.
Ranking topsis(const DecisionMatrix& m, const WeightVector& w, Normalization norm);

// ---------------------------------------------------------------------------
// ELECTRE III

struct ElectreThreshold {
  double q = 0.0;  ///< indifference
  double p = 0.0;  ///< preference
  double v = 0.0;  ///< veto
};

struct ElectreThresholds {
  std::map<std::string, ElectreThreshold> by_criterion;

  /// Thresholds aligned with `criteria`; validates 0 <= q <= p <= v.
  std::vector<ElectreThreshold> aligned(std::span<const Criterion> criteria) const;
};

/// Expert thresholds for the eleven mission criteria.
const ElectreThresholds& mission_electre_thresholds();

/// Outranking credibility S(a, b) for every ordered pair.
SquareMatrix<double> electre_credibility(const DecisionMatrix& m, const WeightVector& w, const ElectreThresholds& t);

/// Discrimination threshold s(lambda) = 0.3 - 0.15 lambda.
double electre_discrimination(double lambda);

struct ElectreDistillation {
  std::vector<int> descending;  ///< class rank per alternative, 1 = best
  std::vector<int> ascending;   ///< class rank per alternative, 1 = best
};

ElectreDistillation electre_distill(const SquareMatrix<double>& credibility);

/// Ranks by the mean of the descending and ascending class ranks. Metadata
/// holds the credibility matrix, both pre-orders and incomparable pairs.
Ranking electre3(const DecisionMatrix& m, const WeightVector& w, const ElectreThresholds& t);

// ---------------------------------------------------------------------------
// MULTIMOORA

/// Combines three sub-rankings (ratio system, reference point, full
/// multiplicative form) by dominance: a dominates b when a's rank is <= b's in
/// all three and < in one. Order: dominated count desc, rank sum asc, ratio
/// rank asc, matrix order.
Ranking dominance_aggregate(std::string method, std::span<const std::string> ids,
                            const std::array<std::vector<int>, 3>& sub_ranks);

Ranking multimoora(const DecisionMatrix& m, const WeightVector& w);

// ---------------------------------------------------------------------------
// RIM

struct RimInterval {
  double a = 0.0;  ///< range lower bound
  double b = 0.0;  ///< range upper bound
  double c = 0.0;  ///< reference ideal lower bound
  double d = 0.0;  ///< reference ideal upper bound
};

struct RimParams {
  std::map<std::string, RimInterval> by_criterion;

  std::vector<RimInterval> aligned(std::span<const Criterion> criteria) const;
};

/// Range = observed [min, max]; reference ideal = the best observed value
/// widened by the criterion's indifference threshold, clipped to the range.
RimParams rim_params_from_matrix(const DecisionMatrix& m, const ElectreThresholds& indifference);

/// Three-case RIM normalization of one value.
double rim_normalize(double value, const RimInterval& interval);

Ranking rim(const DecisionMatrix& m, const WeightVector& w, const RimParams& params);

}  // namespace uavdss
