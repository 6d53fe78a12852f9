#pragma once

#include <Eigen/Core>
#include <vector>

namespace wmort {

// Spline/linear bases for the covariate and lag dimensions.
//
// Column counts:
//   cubic-bspline: #interior + 4 (clamped cubic B-splines)
//   natural-cubic: #knots (boundary + interior) with intercept, one less without
//   linear:        [1, x] with intercept, [x] without
//   identity:      single column, the value itself
//   constant:      single column of ones (degenerate, used by tests)
//
// Points beyond the boundary knots extrapolate linearly: natural cubics are
// linear there by construction, B-spline columns continue the end polynomial
// with its boundary tangent. Forecasted covariates can exceed the
// calibration range, so the rule matters and is pinned here.
enum class BasisKind { CubicBSpline, NaturalCubic, Linear, Identity, Constant };

struct BasisSpec {
  BasisKind kind = BasisKind::Identity;
  std::vector<double> interior_knots;  // sorted, strictly inside the boundary
  double boundary_lower = 0.0;
  double boundary_upper = 1.0;
  bool intercept = false;

  int n_columns() const;
  void check() const;  // throws on unsorted knots / degenerate boundary
};

// rows = points, columns per n_columns()
Eigen::MatrixXd eval_basis(const BasisSpec& spec, const std::vector<double>& points);

// single point convenience
Eigen::VectorXd eval_basis_row(const BasisSpec& spec, double x);

// Interior knots at the given probabilities (type-7), boundary at min/max.
// Throws if fewer than 10 distinct values or all values equal.
BasisSpec knots_from_percentiles(BasisKind kind, const std::vector<double>& values,
                                 const std::vector<double>& probs, bool intercept = false);

}  // namespace wmort
