#include "uavdss/normalize.hpp"

#include <algorithm>
#include <cmath>

#include "uavdss/error.hpp"

namespace uavdss {

NormalizedMatrix linear_normalize(const DecisionMatrix& m) {
  NormalizedMatrix out{m.num_alternatives(), m.num_criteria(), {}, true};
  out.values.resize(out.rows * out.cols);
  for (std::size_t c = 0; c < out.cols; ++c) {
    const auto col = m.column(c);
    const auto& id = m.criteria()[c].id;
    if (m.maximized(c)) {
      const double hi = *std::max_element(col.begin(), col.end());
      if (!(hi > 0.0)) throw DomainError("linear normalization: maximized criterion '" + id + "' has no positive value");
      for (std::size_t r = 0; r < out.rows; ++r) out.values[r * out.cols + c] = col[r] / hi;
    } else {
      for (std::size_t r = 0; r < out.rows; ++r) {
        if (!(col[r] > 0.0)) {
          throw DomainError("linear normalization: minimized criterion '" + id + "' has nonpositive value for '" +
                            m.alternatives()[r] + "'");
        }
      }
      const double lo = *std::min_element(col.begin(), col.end());
      for (std::size_t r = 0; r < out.rows; ++r) out.values[r * out.cols + c] = lo / col[r];
    }
  }
  return out;
}

NormalizedMatrix vector_normalize(const DecisionMatrix& m) {
  NormalizedMatrix out{m.num_alternatives(), m.num_criteria(), {}, false};
  out.values.resize(out.rows * out.cols);
  for (std::size_t c = 0; c < out.cols; ++c) {
    double sq = 0.0;
    for (std::size_t r = 0; r < out.rows; ++r) sq += m(r, c) * m(r, c);
    if (!(sq > 0.0)) throw DomainError("vector normalization: criterion '" + m.criteria()[c].id + "' is all zero");
    const double norm = std::sqrt(sq);
    for (std::size_t r = 0; r < out.rows; ++r) out.values[r * out.cols + c] = m(r, c) / norm;
  }
  return out;
}

}  // namespace uavdss
