#pragma once

#include <span>
#include <string>
#include <vector>

#include "uavdss/crisp_methods.hpp"
#include "uavdss/model.hpp"
#include "uavdss/ranking.hpp"
#include "uavdss/square_matrix.hpp"
#include "uavdss/tfn.hpp"

namespace uavdss {

// Crisp performance values enter every fuzzy method as degenerate TFNs; only
// the weights carry genuine fuzziness.

// ---------------------------------------------------------------------------
// Fuzzy AHP

/// Fuzzy geometric-mean weights of a TFN pairwise matrix of size p:
///   w_i1 = g_i(a1) / sum_k g_k(a3)
///   w_i2 = g_i(a2) / sum_k g_k(a2)
///   w_i3 = g_i(a3) / sum_k g_k(a1)
/// with g_i(x) the p-th root of the product of row i.
std::vector<Tfn> fuzzy_geometric_weights(const SquareMatrix<Tfn>& a);

/// Criteria comparisons div(T(D_i), T(D_j)) with membership TFNs; pairs of
/// equal degree (and the diagonal) are crisp 1.
SquareMatrix<Tfn> fuzzy_ahp_criteria_matrix(std::span<const ImportanceDegree> degrees);

/// Saaty value n lifted to (n-1, n, n+1) clipped to [1, 9]; crisp for n = 1.
Tfn lift_saaty(int n);

/// Alternative comparisons on one criterion: the crisp 1..9 scale lifted by
/// lift_saaty, with the reciprocal TFN below the diagonal.
SquareMatrix<Tfn> fuzzy_ahp_alternative_matrix(const DecisionMatrix& m, std::size_t criterion);

struct FuzzyAhpPriorities {
  std::vector<Tfn> criteria;
  std::vector<std::vector<Tfn>> local;  ///< [criterion][alternative]
  std::vector<Tfn> global;              ///< sum_f w_f * p_sf
};

FuzzyAhpPriorities fuzzy_ahp_priorities(const SquareMatrix<Tfn>& criteria_matrix,
                                        std::span<const SquareMatrix<Tfn>> alternative_matrices);

/// Orders fuzzy priorities with the maximizing/minimizing-set comparator.
Ranking rank_fuzzy_priorities(std::string method, std::span<const std::string> ids, std::span<const Tfn> priorities);

Ranking fuzzy_ahp(const DecisionMatrix& m, const OperatorProfile& profile);

// ---------------------------------------------------------------------------

/// Fuzzy VIKOR with widened denominators; Q defuzzified by the 2nd weighted
/// mean and ranked ascending.
Ranking fuzzy_vikor(const DecisionMatrix& m, const FuzzyWeightVector& w, double v = 0.5);

/// Normalized and weighted TFN matrix used by fuzzy TOPSIS, row-major and
/// benefit oriented (minimized criteria under vector normalization become
/// 1 - r).
std::vector<Tfn> fuzzy_topsis_weighted(const DecisionMatrix& m, const FuzzyWeightVector& w, Normalization norm);

/// Closeness to the fuzzy ideal (1, 1, 1) against the anti-ideal (0, 0, 0),
/// per-criterion vertex distances summed.
Ranking fuzzy_topsis(const DecisionMatrix& m, const FuzzyWeightVector& w, Normalization norm);

/// Ratio system, reference point and full multiplicative form with TFN
/// arithmetic, defuzzified by BNP and combined by dominance.
Ranking fuzzy_multimoora(const DecisionMatrix& m, const FuzzyWeightVector& w);

/// Fuzzy WSM and WPM, each defuzzified by centroid, mixed by lambda.
Ranking fuzzy_waspas(const DecisionMatrix& m, const FuzzyWeightVector& w, double lambda = 0.5);

}  // namespace uavdss
