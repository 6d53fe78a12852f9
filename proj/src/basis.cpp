#include "wmort/basis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "wmort/stats.hpp"

namespace wmort {

namespace {

// ---- clamped cubic B-splines (de Boor / basis-funs form) ----

std::vector<double> padded_knots(const BasisSpec& s) {
  std::vector<double> t;
  t.reserve(s.interior_knots.size() + 8);
  for (int i = 0; i < 4; ++i) t.push_back(s.boundary_lower);
  t.insert(t.end(), s.interior_knots.begin(), s.interior_knots.end());
  for (int i = 0; i < 4; ++i) t.push_back(s.boundary_upper);
  return t;
}

int find_span(const std::vector<double>& t, int degree, double x) {
  const int n_basis = static_cast<int>(t.size()) - degree - 1;
  if (x >= t[n_basis]) {  // right-closed at the upper boundary
    int k = n_basis - 1;
    while (k > 0 && t[k] == t[k + 1]) --k;
    return k;
  }
  if (x <= t[degree]) {
    int k = degree;
    while (k + 2 < static_cast<int>(t.size()) && t[k] == t[k + 1]) ++k;
    return k;
  }
  int lo = degree, hi = n_basis;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    (x < t[mid] ? hi : lo) = mid;
  }
  return lo;
}

// values of the degree+1 nonzero basis functions at x (indices span-degree..span)
void basis_funs(const std::vector<double>& t, int degree, int span, double x, double* out) {
  double left[8], right[8];
  out[0] = 1.0;
  for (int j = 1; j <= degree; ++j) {
    left[j] = x - t[span + 1 - j];
    right[j] = t[span + j] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double denom = right[r + 1] + left[j - r];
      const double temp = denom != 0.0 ? out[r] / denom : 0.0;
      out[r] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    out[j] = saved;
  }
}

// all n basis values at x, x within [lower, upper]
void bspline_values(const BasisSpec& s, const std::vector<double>& t, double x, Eigen::VectorXd& row) {
  row.setZero();
  const int span = find_span(t, 3, x);
  double nz[4];
  basis_funs(t, 3, span, x, nz);
  for (int j = 0; j <= 3; ++j) row[span - 3 + j] = nz[j];
}

// first derivatives of all n basis functions at x
void bspline_derivs(const BasisSpec& s, const std::vector<double>& t, double x, Eigen::VectorXd& row) {
  row.setZero();
  const int span = find_span(t, 2, x);  // spans coincide for clamped interior x
  double nz[3];
  basis_funs(t, 2, span, x, nz);
  // B'_{i,3} = 3 [ B_{i,2}/(t_{i+3}-t_i) - B_{i+1,2}/(t_{i+4}-t_{i+1}) ]
  const int n = static_cast<int>(row.size());
  auto deg2 = [&](int i) -> double {
    if (i < span - 2 || i > span) return 0.0;
    return nz[i - (span - 2)];
  };
  for (int i = 0; i < n; ++i) {
    double v = 0.0;
    const double d1 = t[i + 3] - t[i];
    const double d2 = t[i + 4] - t[i + 1];
    if (d1 != 0.0) v += deg2(i) / d1;
    if (d2 != 0.0) v -= deg2(i + 1) / d2;
    row[i] = 3.0 * v;
  }
}

void bspline_row(const BasisSpec& s, const std::vector<double>& t, double x, Eigen::VectorXd& row) {
  const double lo = s.boundary_lower, up = s.boundary_upper;
  if (x >= lo && x <= up) {
    bspline_values(s, t, x, row);
    return;
  }
  const double b = x < lo ? lo : up;
  Eigen::VectorXd val(row.size()), der(row.size());
  bspline_values(s, t, b, val);
  bspline_derivs(s, t, b, der);
  row = val + (x - b) * der;
}

// ---- natural cubic splines, truncated-power form ----
//
// Knots k_1 < ... < k_K (boundary + interior). Basis: 1 (optional), x, and
// d_j(x) - d_{K-1}(x) for j = 1..K-2 with
//   d_j(x) = [ (x-k_j)^3_+ - (x-k_K)^3_+ ] / (k_K - k_j),
// which is cubic inside, linear beyond both boundary knots and C^2 everywhere.

std::vector<double> natural_knots(const BasisSpec& s) {
  std::vector<double> k;
  k.push_back(s.boundary_lower);
  k.insert(k.end(), s.interior_knots.begin(), s.interior_knots.end());
  k.push_back(s.boundary_upper);
  return k;
}

double cube_pos(double v) { return v > 0.0 ? v * v * v : 0.0; }

void natural_row(const BasisSpec& s, const std::vector<double>& k, double x, Eigen::VectorXd& row) {
  const int K = static_cast<int>(k.size());
  auto d = [&](int j) {  // j is 0-based knot index
    return (cube_pos(x - k[j]) - cube_pos(x - k[K - 1])) / (k[K - 1] - k[j]);
  };
  int c = 0;
  if (s.intercept) row[c++] = 1.0;
  row[c++] = x;
  const double dlast = d(K - 2);
  for (int j = 0; j < K - 2; ++j) row[c++] = d(j) - dlast;
}

}  // namespace

void BasisSpec::check() const {
  if (kind == BasisKind::Identity || kind == BasisKind::Linear || kind == BasisKind::Constant) return;
  if (!(boundary_lower < boundary_upper))
    throw std::invalid_argument("basis: degenerate boundary");
  for (std::size_t i = 0; i < interior_knots.size(); ++i) {
    if (i > 0 && !(interior_knots[i - 1] < interior_knots[i]))
      throw std::invalid_argument("basis: interior knots not strictly increasing");
    if (!(interior_knots[i] > boundary_lower && interior_knots[i] < boundary_upper))
      throw std::invalid_argument("basis: interior knot outside the boundary");
  }
  if (kind == BasisKind::NaturalCubic && interior_knots.size() + 2 < 2)
    throw std::invalid_argument("basis: natural cubic needs at least two knots");
}

int BasisSpec::n_columns() const {
  switch (kind) {
    case BasisKind::CubicBSpline:
      return static_cast<int>(interior_knots.size()) + 4;
    case BasisKind::NaturalCubic:
      return static_cast<int>(interior_knots.size()) + 2 - (intercept ? 0 : 1);
    case BasisKind::Linear:
      return intercept ? 2 : 1;
    case BasisKind::Identity:
    case BasisKind::Constant:
      return 1;
  }
  return 0;
}

Eigen::VectorXd eval_basis_row(const BasisSpec& spec, double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("eval_basis: non-finite point");
  Eigen::VectorXd row(spec.n_columns());
  switch (spec.kind) {
    case BasisKind::CubicBSpline: {
      const auto t = padded_knots(spec);
      bspline_row(spec, t, x, row);
      break;
    }
    case BasisKind::NaturalCubic: {
      const auto k = natural_knots(spec);
      Eigen::VectorXd full(static_cast<int>(k.size()));
      BasisSpec with_icpt = spec;
      with_icpt.intercept = true;
      natural_row(with_icpt, k, x, full);
      row = spec.intercept ? full : full.tail(full.size() - 1).eval();
      break;
    }
    case BasisKind::Linear:
      if (spec.intercept) {
        row[0] = 1.0;
        row[1] = x;
      } else {
        row[0] = x;
      }
      break;
    case BasisKind::Identity:
      row[0] = x;
      break;
    case BasisKind::Constant:
      row[0] = 1.0;
      break;
  }
  return row;
}

Eigen::MatrixXd eval_basis(const BasisSpec& spec, const std::vector<double>& points) {
  spec.check();
  Eigen::MatrixXd out(static_cast<Eigen::Index>(points.size()), spec.n_columns());
  for (std::size_t i = 0; i < points.size(); ++i)
    out.row(static_cast<Eigen::Index>(i)) = eval_basis_row(spec, points[i]).transpose();
  return out;
}

BasisSpec knots_from_percentiles(BasisKind kind, const std::vector<double>& values,
                                 const std::vector<double>& probs, bool intercept) {
  std::set<double> distinct(values.begin(), values.end());
  if (distinct.size() < 10)
    throw std::invalid_argument("knots_from_percentiles: need at least 10 distinct values");
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  BasisSpec s;
  s.kind = kind;
  s.intercept = intercept;
  s.boundary_lower = sorted.front();
  s.boundary_upper = sorted.back();
  for (double p : probs) s.interior_knots.push_back(quantile_type7_sorted(sorted, p));
  std::sort(s.interior_knots.begin(), s.interior_knots.end());
  s.check();
  return s;
}

}  // namespace wmort
