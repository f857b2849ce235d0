#pragma once

// Random instance generators and independent oracles shared by the unit tests
// and the acceptance binary. Nothing here calls the library's method code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "uavdss/model.hpp"
#include "uavdss/ranking.hpp"

namespace uavdss::testing {

inline double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
inline double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * u01(rng); }

inline std::vector<Criterion> make_criteria(std::size_t k, std::mt19937_64* rng = nullptr) {
  std::vector<Criterion> out;
  for (std::size_t f = 0; f < k; ++f) {
    Direction d = Direction::Minimize;
    if (rng && u01(*rng) < 0.5) d = Direction::Maximize;
    out.push_back({"c" + std::to_string(f), "C" + std::to_string(f), d, ""});
  }
  return out;
}

inline std::vector<std::string> make_ids(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

/// n x k matrix with values in [lo, hi]; mixed directions when `mixed`.
inline DecisionMatrix random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t k, bool mixed = true,
                                    double lo = 1.0, double hi = 10.0) {
  auto criteria = make_criteria(k, mixed ? &rng : nullptr);
  std::vector<double> v(n * k);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return DecisionMatrix(std::move(criteria), make_ids(n), std::move(v));
}

inline DecisionMatrix matrix(std::vector<Direction> dirs, std::vector<std::vector<double>> rows) {
  std::vector<Criterion> criteria;
  for (std::size_t f = 0; f < dirs.size(); ++f) criteria.push_back({"c" + std::to_string(f), "", dirs[f], ""});
  std::vector<double> v;
  for (const auto& r : rows) v.insert(v.end(), r.begin(), r.end());
  return DecisionMatrix(std::move(criteria), make_ids(rows.size()), std::move(v));
}

inline WeightVector random_weights(std::mt19937_64& rng, const std::vector<Criterion>& criteria) {
  WeightVector w;
  double total = 0.0;
  std::vector<double> raw;
  for (std::size_t f = 0; f < criteria.size(); ++f) {
    raw.push_back(uniform(rng, 0.05, 1.0));
    total += raw.back();
  }
  for (std::size_t f = 0; f < criteria.size(); ++f) w.weights[criteria[f].id] = raw[f] / total;
  return w;
}

inline WeightVector weights_of(const std::vector<Criterion>& criteria, std::vector<double> w) {
  WeightVector out;
  for (std::size_t f = 0; f < criteria.size(); ++f) out.weights[criteria[f].id] = w[f];
  return out;
}

/// Degenerate TFN weights (w, w, w).
inline FuzzyWeightVector crisp_fuzzy(const WeightVector& w) {
  FuzzyWeightVector out;
  for (const auto& [id, x] : w.weights) out.weights[id] = Tfn::crisp(x);
  return out;
}

/// True when no two values lie within `gap` (relative) of each other.
inline bool well_separated(std::vector<double> xs, double gap = 1e-6) {
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] - xs[i - 1] <= gap * std::max({1.0, std::abs(xs[i]), std::abs(xs[i - 1])})) return false;
  }
  return true;
}

/// Indices sorted by value, stable.
inline std::vector<std::size_t> argsort(const std::vector<double>& xs, bool descending) {
  std::vector<std::size_t> idx(xs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return descending ? xs[a] > xs[b] : xs[a] < xs[b]; });
  return idx;
}

/// True when ranks are competition ranks of the ordered list and every row
/// appears exactly once.
inline bool is_competition_ranking(const Ranking& r, std::size_t n) {
  if (r.ordered.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = r.ordered[i];
    if (a.index >= n || seen[a.index]) return false;
    seen[a.index] = true;
    if (i == 0 && a.rank != 1) return false;
    if (i > 0) {
      const int prev = r.ordered[i - 1].rank;
      if (a.rank != prev && a.rank != static_cast<int>(i) + 1) return false;
    }
  }
  return true;
}

/// Wilcoxon W+ and two-sided exact p by enumerating every sign pattern.
struct EnumeratedWilcoxon {
  double w_plus = 0.0;
  double p_value = 1.0;
};

inline EnumeratedWilcoxon enumerate_wilcoxon(const std::vector<double>& diffs) {
  std::vector<double> nz;
  for (double d : diffs) {
    if (d != 0.0) nz.push_back(d);
  }
  const std::size_t n = nz.size();
  // average ranks of |d|
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n; ++i) {
    double less = 0.0, equal = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(nz[j]) < std::abs(nz[i])) less += 1.0;
      if (std::abs(nz[j]) == std::abs(nz[i])) equal += 1.0;
    }
    ranks[i] = less + (equal + 1.0) / 2.0;
  }
  EnumeratedWilcoxon out;
  for (std::size_t i = 0; i < n; ++i) {
    if (nz[i] > 0) out.w_plus += ranks[i];
  }
  const std::uint64_t patterns = std::uint64_t{1} << n;
  std::uint64_t le = 0, ge = 0;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) w += ranks[i];
    }
    if (w <= out.w_plus + 1e-9) ++le;
    if (w >= out.w_plus - 1e-9) ++ge;
  }
  out.p_value = std::min(1.0, 2.0 * static_cast<double>(std::min(le, ge)) / static_cast<double>(patterns));
  return out;
}

/// Monte-Carlo hypervolume estimate and its standard error.
struct MonteCarloVolume {
  double estimate = 0.0;
  double sigma = 0.0;
};

inline MonteCarloVolume monte_carlo_hypervolume(const std::vector<std::vector<double>>& pts,
                                                const std::vector<double>& ref, std::size_t samples,
                                                std::uint64_t seed) {
  const std::size_t d = ref.size();
  std::vector<double> lo(d);
  for (std::size_t j = 0; j < d; ++j) {
    lo[j] = ref[j];
    for (const auto& p : pts) lo[j] = std::min(lo[j], p[j]);
  }
  double box = 1.0;
  for (std::size_t j = 0; j < d; ++j) box *= ref[j] - lo[j];
  std::mt19937_64 rng(seed);
  std::size_t hits = 0;
  std::vector<double> x(d);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t j = 0; j < d; ++j) x[j] = uniform(rng, lo[j], ref[j]);
    for (const auto& p : pts) {
      bool dominated = true;
      for (std::size_t j = 0; j < d && dominated; ++j) dominated = p[j] <= x[j];
      if (dominated) {
        ++hits;
        break;
      }
    }
  }
  const double frac = static_cast<double>(hits) / static_cast<double>(samples);
  return {box * frac, box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples))};
}

}  // namespace uavdss::testing
