#pragma once

#include <cstddef>
#include <vector>

#include "cobalt/core/matrix.hpp"

namespace cobalt {

struct InterpolationOptions {
  /// Optional grading, one weight per ring variable. If every entry is
  /// weighted-homogeneous of weight r_i + c_j the determinant is homogeneous,
  /// and one variable of nonzero weight is fixed to 1 and recovered afterwards.
  /// The grading is verified on the matrix and silently ignored if it fails.
  std::vector<int> weights;
  /// Refuse grids with more evaluation points than this.
  std::size_t max_points = 20'000'000;
};

struct InterpolationStats {
  std::vector<int> degree_bounds;  // per ring variable; -1 when not interpolated
  int eliminated_variable = -1;
  std::size_t points = 0;
  std::size_t primes = 0;
};

/// Exact determinant of a polynomial matrix by evaluation at a grid of points
/// modulo several 62-bit primes, multivariate Newton interpolation and Chinese
/// remaindering. Degree bounds come from row/column maxima and the coefficient
/// bound from the product of row 1-norms, so the result is exact.
MultiPoly det_interpolate(const Matrix<MultiPoly>& m, const InterpolationOptions& opts = {},
                          InterpolationStats* stats = nullptr);

/// Determinant of a polynomial matrix evaluated at a rational point, as the
/// exact fraction-free determinant of the specialized matrix.
Rational det_at_point(const Matrix<MultiPoly>& m, const std::vector<Rational>& point);

/// Specializes every entry at a rational point.
Matrix<Rational> specialize(const Matrix<MultiPoly>& m, const std::vector<Rational>& point);

}  // namespace cobalt
