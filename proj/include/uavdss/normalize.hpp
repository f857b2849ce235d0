#pragma once

#include <vector>

#include "uavdss/model.hpp"

namespace uavdss {

/// Row-major normalized matrix with the shape of its source.
struct NormalizedMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
  /// True when every column is oriented so that larger is better.
  bool benefit_oriented = false;

  double operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

/// Linear transformation of maximum: v / max for maximized criteria,
/// min / v for minimized ones. The result is benefit oriented.
/// Throws DomainError when a minimized column holds a nonpositive value or a
/// maximized column has a nonpositive maximum.
NormalizedMatrix linear_normalize(const DecisionMatrix& m);

/// Vector normalization v / sqrt(sum v^2). Keeps the criterion direction.
/// Throws DomainError for an all-zero column.
NormalizedMatrix vector_normalize(const DecisionMatrix& m);

}  // namespace uavdss
