#include "uavdss/fuzzy_methods.hpp"

#include <algorithm>
#include <cmath>

#include "uavdss/error.hpp"
#include "uavdss/normalize.hpp"

namespace uavdss {

using fuzzy::add;
using fuzzy::mul;
using fuzzy::scale;
using fuzzy::sub;

namespace {

std::vector<Tfn> checked_weights(const FuzzyWeightVector& w, std::span<const Criterion> criteria) {
  auto out = w.aligned(criteria);
  for (std::size_t f = 0; f < out.size(); ++f) {
    const auto& x = out[f];
    if (!x.is_valid() || x.a1 < 0.0 || x.a3 > 1.0) {
      throw ValidationError("fuzzy weight of '" + criteria[f].id + "' is not a TFN within [0, 1]");
    }
  }
  return out;
}

nlohmann::json to_json(std::span<const Tfn> xs) {
  auto out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back({x.a1, x.a2, x.a3});
  return out;
}

double geometric_mean(std::span<const double> xs) {
  double log_sum = 0.0;
  for (double x : xs) {
    if (x == 0.0) return 0.0;
    log_sum += std::log(x);
  }
  return std::exp(log_sum / static_cast<double>(xs.size()));
}

}  // namespace

// ---------------------------------------------------------------------------
// Fuzzy AHP

std::vector<Tfn> fuzzy_geometric_weights(const SquareMatrix<Tfn>& a) {
  const std::size_t p = a.size();
  if (p == 0) throw DomainError("fuzzy_geometric_weights: empty matrix");
  std::vector<double> g1(p), g2(p), g3(p), row(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (!a(i, j).is_valid() || a(i, j).a1 < 0.0) {
        throw DomainError("fuzzy_geometric_weights: invalid comparison at (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
      }
    }
    for (std::size_t j = 0; j < p; ++j) row[j] = a(i, j).a1;
    g1[i] = geometric_mean(row);
    for (std::size_t j = 0; j < p; ++j) row[j] = a(i, j).a2;
    g2[i] = geometric_mean(row);
    for (std::size_t j = 0; j < p; ++j) row[j] = a(i, j).a3;
    g3[i] = geometric_mean(row);
  }
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (std::size_t i = 0; i < p; ++i) {
    s1 += g1[i];
    s2 += g2[i];
    s3 += g3[i];
  }
  if (!(s1 > 0.0 && s2 > 0.0 && s3 > 0.0)) {
    throw DomainError("fuzzy_geometric_weights: a component of the row means sums to zero");
  }
  std::vector<Tfn> w(p);
  for (std::size_t i = 0; i < p; ++i) w[i] = {g1[i] / s3, g2[i] / s2, g3[i] / s1};
  return w;
}

SquareMatrix<Tfn> fuzzy_ahp_criteria_matrix(std::span<const ImportanceDegree> degrees) {
  SquareMatrix<Tfn> a(degrees.size(), Tfn::crisp(1.0));
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      if (degrees[i] != degrees[j]) a(i, j) = fuzzy::div(degree_tfn(degrees[i]), degree_tfn(degrees[j]));
    }
  }
  return a;
}

Tfn lift_saaty(int n) {
  if (n < 1 || n > 9) throw DomainError("lift_saaty: value outside 1..9");
  if (n == 1) return Tfn::crisp(1.0);
  return {std::max(1.0, n - 1.0), static_cast<double>(n), std::min(9.0, n + 1.0)};
}

SquareMatrix<Tfn> fuzzy_ahp_alternative_matrix(const DecisionMatrix& m, std::size_t criterion) {
  const auto col = m.column(criterion);
  const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
  const double range = *hi - *lo;
  const bool maximize = m.maximized(criterion);
  const std::size_t n = col.size();
  SquareMatrix<Tfn> a(n, Tfn::crisp(1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Tfn better = lift_saaty(ahp_scale_value(col[i], col[j], range));
      const Tfn worse = fuzzy::div(Tfn::crisp(1.0), better);
      const bool i_better = maximize ? col[i] > col[j] : col[i] < col[j];
      a(i, j) = i_better ? better : worse;
      a(j, i) = i_better ? worse : better;
    }
  }
  return a;
}

FuzzyAhpPriorities fuzzy_ahp_priorities(const SquareMatrix<Tfn>& criteria_matrix,
                                        std::span<const SquareMatrix<Tfn>> alternative_matrices) {
  if (alternative_matrices.size() != criteria_matrix.size()) {
    throw ValidationError("fuzzy ahp: one alternative matrix per criterion required");
  }
  FuzzyAhpPriorities out;
  out.criteria = fuzzy_geometric_weights(criteria_matrix);
  const std::size_t n_alt = alternative_matrices.empty() ? 0 : alternative_matrices.front().size();
  out.global.assign(n_alt, Tfn{});
  for (std::size_t f = 0; f < alternative_matrices.size(); ++f) {
    if (alternative_matrices[f].size() != n_alt) {
      throw ValidationError("fuzzy ahp: alternative matrices differ in size");
    }
    out.local.push_back(fuzzy_geometric_weights(alternative_matrices[f]));
    for (std::size_t s = 0; s < n_alt; ++s) {
      out.global[s] = add(out.global[s], mul(out.criteria[f], out.local.back()[s]));
    }
  }
  return out;
}

Ranking rank_fuzzy_priorities(std::string method, std::span<const std::string> ids, std::span<const Tfn> priorities) {
  const auto utilities = fuzzy::chen_utilities(priorities);
  auto out = rank_by_score(std::move(method), ids, utilities, Sense::HigherIsBetter);
  out.metadata["comparator"] = "maximizing/minimizing set";
  out.metadata["optimism"] = fuzzy::kChenOptimism;
  out.metadata["priorities"] = to_json(priorities);
  return out;
}

Ranking fuzzy_ahp(const DecisionMatrix& m, const OperatorProfile& profile) {
  if (m.num_alternatives() < 2) throw DomainError("fuzzy_ahp: at least two alternatives required");
  const auto degrees = aligned_degrees(profile, m.criteria());
  std::vector<SquareMatrix<Tfn>> alternatives;
  alternatives.reserve(m.num_criteria());
  for (std::size_t f = 0; f < m.num_criteria(); ++f) alternatives.push_back(fuzzy_ahp_alternative_matrix(m, f));
  const auto priorities = fuzzy_ahp_priorities(fuzzy_ahp_criteria_matrix(degrees), alternatives);
  auto out = rank_fuzzy_priorities("fuzzy_ahp", m.alternatives(), priorities.global);
  out.metadata["criteria_weights"] = to_json(priorities.criteria);
  return out;
}

// ---------------------------------------------------------------------------
// Fuzzy VIKOR

Ranking fuzzy_vikor(const DecisionMatrix& m, const FuzzyWeightVector& w, double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError("fuzzy_vikor: v outside [0, 1]");
  const auto weights = checked_weights(w, m.criteria());
  const std::size_t n = m.num_alternatives();
  std::vector<Tfn> s(n);
  std::vector<Tfn> r(n);
  std::vector<std::string> degenerate;

  for (std::size_t f = 0; f < m.num_criteria(); ++f) {
    Tfn best = Tfn::crisp(m(0, f));
    Tfn worst = best;
    for (std::size_t k = 1; k < n; ++k) {
      const auto x = Tfn::crisp(m(k, f));
      best = m.maximized(f) ? fuzzy::max(best, x) : fuzzy::min(best, x);
      worst = m.maximized(f) ? fuzzy::min(worst, x) : fuzzy::max(worst, x);
    }
    const double denom = m.maximized(f) ? best.a3 - worst.a1 : worst.a3 - best.a1;
    if (!(denom > 0.0)) {
      degenerate.push_back(m.criteria()[f].id);
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const auto x = Tfn::crisp(m(k, f));
      const Tfn diff = m.maximized(f) ? sub(best, x) : sub(x, best);
      const Tfn term = mul(weights[f], scale(1.0 / denom, diff));
      s[k] = add(s[k], term);
      r[k] = fuzzy::max(r[k], term);
    }
  }

  Tfn s_best = s[0], s_worst = s[0], r_best = r[0], r_worst = r[0];
  for (std::size_t k = 1; k < n; ++k) {
    s_best = fuzzy::min(s_best, s[k]);
    s_worst = fuzzy::max(s_worst, s[k]);
    r_best = fuzzy::min(r_best, r[k]);
    r_worst = fuzzy::max(r_worst, r[k]);
  }
  const double s_span = s_worst.a3 - s_best.a1;
  const double r_span = r_worst.a3 - r_best.a1;

  std::vector<Tfn> q(n);
  std::vector<double> crisp_q(n);
  for (std::size_t k = 0; k < n; ++k) {
    Tfn acc{};
    if (s_span > 0.0) acc = add(acc, scale(v / s_span, sub(s[k], s_best)));
    if (r_span > 0.0) acc = add(acc, scale((1.0 - v) / r_span, sub(r[k], r_best)));
    q[k] = acc;
    crisp_q[k] = fuzzy::defuzz_weighted_mean2(acc);
  }

  auto out = rank_by_score("fuzzy_vikor", m.alternatives(), crisp_q, Sense::LowerIsBetter);
  out.metadata["v"] = v;
  out.metadata["defuzzification"] = "2nd weighted mean";
  out.metadata["S"] = to_json(s);
  out.metadata["R"] = to_json(r);
  out.metadata["Q"] = to_json(q);
  out.metadata["degenerate_criteria"] = degenerate;
  return out;
}

// ---------------------------------------------------------------------------
// Fuzzy TOPSIS

std::vector<Tfn> fuzzy_topsis_weighted(const DecisionMatrix& m, const FuzzyWeightVector& w, Normalization norm) {
  const auto weights = checked_weights(w, m.criteria());
  const std::size_t n = m.num_alternatives();
  const std::size_t k = m.num_criteria();
  std::vector<Tfn> out(n * k);

  for (std::size_t f = 0; f < k; ++f) {
    const auto& id = m.criteria()[f].id;
    std::vector<Tfn> col(n);
    for (std::size_t s = 0; s < n; ++s) col[s] = Tfn::crisp(m(s, f));

    if (norm == Normalization::Vector) {
      double q1 = 0.0, q2 = 0.0, q3 = 0.0;
      for (const auto& x : col) {
        if (x.a1 < 0.0) throw DomainError("fuzzy_topsis: negative value on criterion '" + id + "'");
        q1 += x.a1 * x.a1;
        q2 += x.a2 * x.a2;
        q3 += x.a3 * x.a3;
      }
      if (!(q1 > 0.0)) throw DomainError("vector normalization: criterion '" + id + "' is all zero");
      const Tfn divisor{std::sqrt(q1), std::sqrt(q2), std::sqrt(q3)};
      for (std::size_t s = 0; s < n; ++s) {
        Tfn r = fuzzy::div(col[s], divisor);
        if (!m.maximized(f)) r = sub(Tfn::crisp(1.0), r);
        out[s * k + f] = mul(r, weights[f]);
      }
    } else if (m.maximized(f)) {
      double hi = col[0].a3;
      for (const auto& x : col) hi = std::max(hi, x.a3);
      if (!(hi > 0.0)) throw DomainError("linear normalization: maximized criterion '" + id + "' has no positive value");
      for (std::size_t s = 0; s < n; ++s) out[s * k + f] = mul(scale(1.0 / hi, col[s]), weights[f]);
    } else {
      double lo = col[0].a1;
      for (const auto& x : col) lo = std::min(lo, x.a1);
      if (!(lo > 0.0)) {
        throw DomainError("linear normalization: minimized criterion '" + id + "' has nonpositive value");
      }
      for (std::size_t s = 0; s < n; ++s) {
        out[s * k + f] = mul(fuzzy::div(Tfn::crisp(lo), col[s]), weights[f]);
      }
    }
  }
  return out;
}

Ranking fuzzy_topsis(const DecisionMatrix& m, const FuzzyWeightVector& w, Normalization norm) {
  const auto x = fuzzy_topsis_weighted(m, w, norm);
  const std::size_t n = m.num_alternatives();
  const std::size_t k = m.num_criteria();
  const Tfn ideal = Tfn::crisp(1.0);
  const Tfn anti = Tfn::crisp(0.0);
  std::vector<double> d_plus(n, 0.0), d_minus(n, 0.0), closeness(n, 0.5);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t f = 0; f < k; ++f) {
      d_plus[s] += fuzzy::distance(x[s * k + f], ideal);
      d_minus[s] += fuzzy::distance(x[s * k + f], anti);
    }
    if (d_plus[s] + d_minus[s] > 0.0) closeness[s] = d_minus[s] / (d_plus[s] + d_minus[s]);
  }
  const bool vector = norm == Normalization::Vector;
  auto out = rank_by_score(vector ? "fuzzy_topsis_vector" : "fuzzy_topsis_linear", m.alternatives(), closeness,
                           Sense::HigherIsBetter);
  out.metadata["normalization"] = vector ? "vector" : "linear";
  out.metadata["d_plus"] = d_plus;
  out.metadata["d_minus"] = d_minus;
  return out;
}

// ---------------------------------------------------------------------------
// Fuzzy MULTIMOORA

Ranking fuzzy_multimoora(const DecisionMatrix& m, const FuzzyWeightVector& w) {
  const auto weights = checked_weights(w, m.criteria());
  const std::size_t n = m.num_alternatives();
  const std::size_t k = m.num_criteria();
  const Tfn zero{};

  // Column norm: sqrt of the summed squared vertex distances to zero.
  std::vector<Tfn> x(n * k);
  for (std::size_t f = 0; f < k; ++f) {
    double sq = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      const double d = fuzzy::distance(Tfn::crisp(m(s, f)), zero);
      sq += d * d;
    }
    if (!(sq > 0.0)) throw DomainError("fuzzy_multimoora: criterion '" + m.criteria()[f].id + "' is all zero");
    const double norm = std::sqrt(sq);
    for (std::size_t s = 0; s < n; ++s) {
      if (m(s, f) < 0.0) throw DomainError("fuzzy_multimoora: negative value on '" + m.criteria()[f].id + "'");
      x[s * k + f] = mul(weights[f], scale(1.0 / norm, Tfn::crisp(m(s, f))));
    }
  }

  std::vector<Tfn> ratio(n);
  std::vector<double> ratio_crisp(n);
  for (std::size_t s = 0; s < n; ++s) {
    Tfn gains{}, costs{};
    for (std::size_t f = 0; f < k; ++f) {
      if (m.maximized(f)) {
        gains = add(gains, x[s * k + f]);
      } else {
        costs = add(costs, x[s * k + f]);
      }
    }
    ratio[s] = sub(gains, costs);
    ratio_crisp[s] = fuzzy::defuzz_bnp(ratio[s]);
  }

  std::vector<double> deviation(n, 0.0);
  for (std::size_t f = 0; f < k; ++f) {
    Tfn ref = x[f];
    for (std::size_t s = 1; s < n; ++s) {
      ref = m.maximized(f) ? fuzzy::max(ref, x[s * k + f]) : fuzzy::min(ref, x[s * k + f]);
    }
    for (std::size_t s = 0; s < n; ++s) deviation[s] = std::max(deviation[s], fuzzy::distance(x[s * k + f], ref));
  }

  std::vector<Tfn> utility(n);
  std::vector<double> utility_crisp(n);
  for (std::size_t s = 0; s < n; ++s) {
    Tfn numerator = Tfn::crisp(1.0);
    Tfn denominator = Tfn::crisp(1.0);
    for (std::size_t f = 0; f < k; ++f) {
      const Tfn v = Tfn::crisp(m(s, f));
      if (!(v.a1 > 0.0)) {
        throw DomainError("fuzzy_multimoora: multiplicative form needs positive values ('" + m.alternatives()[s] +
                          "', criterion '" + m.criteria()[f].id + "')");
      }
      if (m.maximized(f)) {
        numerator = mul(numerator, v);
      } else {
        denominator = mul(denominator, v);
      }
    }
    utility[s] = fuzzy::div(numerator, denominator);
    utility_crisp[s] = fuzzy::defuzz_bnp(utility[s]);
  }

  const std::array<std::vector<int>, 3> sub_ranks = {
      competition_ranks(ratio_crisp, Sense::HigherIsBetter),
      competition_ranks(deviation, Sense::LowerIsBetter),
      competition_ranks(utility_crisp, Sense::HigherIsBetter),
  };
  auto out = dominance_aggregate("fuzzy_multimoora", m.alternatives(), sub_ranks);
  out.metadata["defuzzification"] = "BNP";
  out.metadata["normalization"] = "vector, column norm from vertex distances to zero";
  out.metadata["ratio_system"] = {{"scores", ratio_crisp}, {"ranks", sub_ranks[0]}};
  out.metadata["reference_point"] = {{"scores", deviation}, {"ranks", sub_ranks[1]}};
  out.metadata["multiplicative"] = {{"scores", utility_crisp}, {"ranks", sub_ranks[2]}};
  return out;
}

// ---------------------------------------------------------------------------
// Fuzzy WASPAS

Ranking fuzzy_waspas(const DecisionMatrix& m, const FuzzyWeightVector& w, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("fuzzy_waspas: lambda outside [0, 1]");
  const auto weights = checked_weights(w, m.criteria());
  const auto r = linear_normalize(m);
  const std::size_t n = r.rows;
  std::vector<double> additive(n), multiplicative(n, 0.0), q(n);
  for (std::size_t s = 0; s < n; ++s) {
    Tfn sum{};
    Tfn product = Tfn::crisp(1.0);
    for (std::size_t f = 0; f < r.cols; ++f) {
      const Tfn value = Tfn::crisp(r(s, f));
      sum = add(sum, mul(weights[f], value));
      if (lambda < 1.0) {
        if (!(r(s, f) > 0.0)) {
          throw DomainError("fuzzy_waspas: zero normalized value for '" + m.alternatives()[s] + "' on criterion '" +
                            m.criteria()[f].id + "'");
        }
        product = mul(product, fuzzy::pow(value, weights[f]));
      }
    }
    additive[s] = fuzzy::defuzz_centroid(sum);
    if (lambda < 1.0) multiplicative[s] = fuzzy::defuzz_centroid(product);
    q[s] = lambda * additive[s] + (1.0 - lambda) * multiplicative[s];
  }
  auto out = rank_by_score("fuzzy_waspas", m.alternatives(), q, Sense::HigherIsBetter);
  out.metadata["lambda"] = lambda;
  out.metadata["defuzzification"] = "centroid";
  out.metadata["wsm"] = additive;
  out.metadata["wpm"] = multiplicative;
  return out;
}

}  // namespace uavdss
