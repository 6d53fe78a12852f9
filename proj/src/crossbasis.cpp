#include "wmort/crossbasis.hpp"

#include <fstream>
#include <stdexcept>

#include "wmort/tensor.hpp"

namespace wmort {

CrossBasis build_crossbasis(const std::vector<double>& series, const DlnmSpec& spec,
                            const std::string& region, bool allow_burn_in) {
  spec.covariate_basis.check();
  spec.lag_basis.check();
  if (spec.max_lag < 0) throw std::invalid_argument("build_crossbasis: negative max_lag");
  const int T = static_cast<int>(series.size());
  if (T == 0) throw std::invalid_argument("build_crossbasis: empty series");
  if (!allow_burn_in && spec.max_lag > 0)
    throw std::invalid_argument("build_crossbasis: no lag history before the first point and burn-in disabled");

  const int vc = spec.v_cov(), vl = spec.v_lag(), L = spec.max_lag;

  Eigen::MatrixXd B = eval_basis(spec.covariate_basis, series);  // T x vc
  std::vector<double> lags(L + 1);
  for (int l = 0; l <= L; ++l) lags[l] = static_cast<double>(l);
  Eigen::MatrixXd C = eval_basis(spec.lag_basis, lags);  // (L+1) x vl

  CrossBasis cb;
  cb.region = region;
  cb.used_burn_in = L > 0;
  cb.matrix.setZero(T, vc * vl);
  for (int i = 0; i < T; ++i) {
    for (int l = 0; l <= L; ++l) {
      const int src = i - l >= 0 ? i - l : 0;  // constant back-extension
      for (int j = 0; j < vc; ++j) {
        const double bj = B(src, j);
        if (bj == 0.0) continue;
        for (int k = 0; k < vl; ++k) cb.matrix(i, spec.column(j, k)) += bj * C(l, k);
      }
    }
  }
  return cb;
}

Eigen::VectorXd contrast_vector(const DlnmSpec& spec, double xi, double xi_ref) {
  const Eigen::VectorXd b = eval_basis_row(spec.covariate_basis, xi);
  const Eigen::VectorXd bref = eval_basis_row(spec.covariate_basis, xi_ref);
  Eigen::VectorXd csum = Eigen::VectorXd::Zero(spec.v_lag());
  for (int l = 0; l <= spec.max_lag; ++l)
    csum += eval_basis_row(spec.lag_basis, static_cast<double>(l));
  Eigen::VectorXd z(spec.n_columns());
  for (int j = 0; j < spec.v_cov(); ++j)
    for (int k = 0; k < spec.v_lag(); ++k) z[spec.column(j, k)] = (b[j] - bref[j]) * csum[k];
  return z;
}

Eigen::VectorXd lag_contrast_vector(const DlnmSpec& spec, double xi, double xi_ref, double lag) {
  if (lag < 0.0 || lag > static_cast<double>(spec.max_lag))
    throw std::invalid_argument("lag_contrast_vector: lag out of [0, max_lag]");
  const Eigen::VectorXd b = eval_basis_row(spec.covariate_basis, xi);
  const Eigen::VectorXd bref = eval_basis_row(spec.covariate_basis, xi_ref);
  const Eigen::VectorXd c = eval_basis_row(spec.lag_basis, lag);
  Eigen::VectorXd z(spec.n_columns());
  for (int j = 0; j < spec.v_cov(); ++j)
    for (int k = 0; k < spec.v_lag(); ++k) z[spec.column(j, k)] = (b[j] - bref[j]) * c[k];
  return z;
}

void write_crossbasis_csv(const CrossBasis& cb, int year_min, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << "year,isoweek";
  for (int c = 0; c < cb.matrix.cols(); ++c) os << ",z" << c;
  os << "\n";
  for (int i = 0; i < cb.matrix.rows(); ++i) {
    os << (year_min + i / kWeeksPerYear) << "," << (i % kWeeksPerYear + 1);
    for (int c = 0; c < cb.matrix.cols(); ++c) os << "," << cb.matrix(i, c);
    os << "\n";
  }
}

}  // namespace wmort
