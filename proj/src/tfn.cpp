#include "uavdss/tfn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include "uavdss/error.hpp"
#include "uavdss/ranking.hpp"

namespace uavdss {

std::ostream& operator<<(std::ostream& os, const Tfn& x) {
  return os << '(' << x.a1 << ", " << x.a2 << ", " << x.a3 << ')';
}

namespace fuzzy {
namespace {

std::string describe(const Tfn& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void require_nonnegative(const Tfn& x, const char* op) {
  if (x.a1 < 0.0 || x.a2 < 0.0 || x.a3 < 0.0) {
    throw DomainError(std::string(op) + ": operand " + describe(x) + " has a negative component");
  }
}

}  // namespace

Tfn add(const Tfn& x, const Tfn& y) { return {x.a1 + y.a1, x.a2 + y.a2, x.a3 + y.a3}; }

Tfn mul(const Tfn& x, const Tfn& y) {
  require_nonnegative(x, "fuzzy mul");
  require_nonnegative(y, "fuzzy mul");
  return {x.a1 * y.a1, x.a2 * y.a2, x.a3 * y.a3};
}

Tfn scale(double c, const Tfn& x) {
  if (!(c >= 0.0)) throw DomainError("fuzzy scale: negative or NaN factor");
  return {c * x.a1, c * x.a2, c * x.a3};
}

Tfn sub(const Tfn& x, const Tfn& y) { return {x.a1 - y.a3, x.a2 - y.a2, x.a3 - y.a1}; }

Tfn div(const Tfn& x, const Tfn& y) {
  if (!(y.a1 > 0.0)) {
    throw DomainError("fuzzy div: divisor " + describe(y) + " is not strictly positive");
  }
  require_nonnegative(x, "fuzzy div");
  return {x.a1 / y.a3, x.a2 / y.a2, x.a3 / y.a1};
}

double distance(const Tfn& x, const Tfn& y) {
  const double d1 = x.a1 - y.a1;
  const double d2 = x.a2 - y.a2;
  const double d3 = x.a3 - y.a3;
  return std::sqrt((d1 * d1 + d2 * d2 + d3 * d3) / 3.0);
}

Tfn pow(const Tfn& v, const Tfn& w) {
  const auto in_base = [](double c) { return c > 0.0 && c <= 1.0; };
  const auto in_exp = [](double c) { return c >= 0.0 && c <= 1.0; };
  if (!in_base(v.a1) || !in_base(v.a2) || !in_base(v.a3)) {
    throw DomainError("fuzzy pow: base " + describe(v) + " outside (0, 1]");
  }
  if (!in_exp(w.a1) || !in_exp(w.a2) || !in_exp(w.a3)) {
    throw DomainError("fuzzy pow: exponent " + describe(w) + " outside [0, 1]");
  }
  return {std::pow(v.a1, w.a3), std::pow(v.a2, w.a2), std::pow(v.a3, w.a1)};
}

Tfn min(const Tfn& x, const Tfn& y) {
  return {std::min(x.a1, y.a1), std::min(x.a2, y.a2), std::min(x.a3, y.a3)};
}

Tfn max(const Tfn& x, const Tfn& y) {
  return {std::max(x.a1, y.a1), std::max(x.a2, y.a2), std::max(x.a3, y.a3)};
}

double defuzz_weighted_mean2(const Tfn& x) { return (x.a1 + 2.0 * x.a2 + x.a3) / 4.0; }

double defuzz_bnp(const Tfn& x) { return ((x.a3 - x.a1) + (x.a2 - x.a1)) / 3.0 + x.a1; }

double defuzz_centroid(const Tfn& x) { return (x.a1 + x.a2 + x.a3) / 3.0; }

std::vector<double> chen_utilities(std::span<const Tfn> xs, double optimism) {
  if (xs.empty()) throw DomainError("chen_utilities: empty input");
  if (!(optimism >= 0.0 && optimism <= 1.0)) throw DomainError("chen_utilities: optimism outside [0, 1]");

  double lo = xs.front().a1;
  double hi = xs.front().a3;
  for (const auto& x : xs) {
    lo = std::min(lo, x.a1);
    hi = std::max(hi, x.a3);
  }
  const double span = hi - lo;

  std::vector<double> utilities(xs.size(), 0.5);
  if (!(span > 0.0)) return utilities;

  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto& x = xs[i];
    const double right = (x.a3 - lo) / (span - (x.a2 - x.a3));
    const double left = (hi - x.a1) / (span + (x.a2 - x.a1));
    utilities[i] = optimism * right + (1.0 - optimism) * (1.0 - left);
  }
  return utilities;
}

std::vector<std::size_t> chen_compare(std::span<const Tfn> xs, double optimism) {
  // utilities within the ranking tie tolerance count as equal
  const auto ranks = competition_ranks(chen_utilities(xs, optimism), Sense::HigherIsBetter);
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });
  return order;
}

}  // namespace fuzzy
}  // namespace uavdss
