#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace uavdss {

/// Triangular fuzzy number (a1, a2, a3) with a1 <= a2 <= a3.
///
/// a2 is the value of maximum membership; a1 and a3 bound the support.
/// A degenerate triple (c, c, c) stands for the crisp number c.
struct Tfn {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  constexpr Tfn() = default;
  constexpr Tfn(double lo, double mid, double hi) : a1(lo), a2(mid), a3(hi) {}

  static constexpr Tfn crisp(double c) { return {c, c, c}; }

  bool is_valid(double tol = 1e-12) const { return a1 <= a2 + tol && a2 <= a3 + tol; }
  bool is_crisp() const { return a1 == a2 && a2 == a3; }

  friend bool operator==(const Tfn&, const Tfn&) = default;
};

std::ostream& operator<<(std::ostream& os, const Tfn& x);

namespace fuzzy {

Tfn add(const Tfn& x, const Tfn& y);

/// Componentwise product. Both operands must be nonnegative.
Tfn mul(const Tfn& x, const Tfn& y);

/// Multiplication by a nonnegative crisp constant.
Tfn scale(double c, const Tfn& x);

/// Widening subtraction (x1 - y3, x2 - y2, x3 - y1). Not the inverse of add.
Tfn sub(const Tfn& x, const Tfn& y);

/// (x1 / y3, x2 / y2, x3 / y1); requires y1 > 0 and x nonnegative.
Tfn div(const Tfn& x, const Tfn& y);

/// Vertex-method distance sqrt(((x1-y1)^2 + (x2-y2)^2 + (x3-y3)^2) / 3).
double distance(const Tfn& x, const Tfn& y);

/// (v1^w3, v2^w2, v3^w1) for v in (0, 1] and w in [0, 1].
Tfn pow(const Tfn& v, const Tfn& w);

/// Componentwise min / max, used for fuzzy best and worst values.
Tfn min(const Tfn& x, const Tfn& y);
Tfn max(const Tfn& x, const Tfn& y);

/// (a1 + 2 a2 + a3) / 4
double defuzz_weighted_mean2(const Tfn& x);

/// Best nonfuzzy performance: ((a3 - a1) + (a2 - a1)) / 3 + a1
double defuzz_bnp(const Tfn& x);

/// (a1 + a2 + a3) / 3
double defuzz_centroid(const Tfn& x);

/// Optimism index used by the maximizing/minimizing-set comparator.
inline constexpr double kChenOptimism = 0.5;

/// Total utilities of the maximizing-set / minimizing-set ranking.
///
/// The sets are bounded by the smallest a1 and the largest a3 over `xs`.
/// Utility is  k * U_R + (1 - k) * (1 - U_L)  with optimism index k, where
///   U_R = (a3 - xmin) / ((xmax - xmin) - (a2 - a3))
///   U_L = (xmax - a1) / ((xmax - xmin) + (a2 - a1)).
/// When every number collapses to the same point all utilities are 0.5.
std::vector<double> chen_utilities(std::span<const Tfn> xs, double optimism = kChenOptimism);

/// Indices of `xs` ordered best first by chen_utilities; utilities tied within
/// the ranking tolerance keep input order.
std::vector<std::size_t> chen_compare(std::span<const Tfn> xs, double optimism = kChenOptimism);

}  // namespace fuzzy
}  // namespace uavdss
