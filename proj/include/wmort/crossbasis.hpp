#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "wmort/basis.hpp"

namespace wmort {

// Distributed-lag configuration for one covariate channel. The covariate
// basis is region-specific (knots come from each region's own covariate
// distribution); the lag basis and max_lag are shared across regions.
struct DlnmSpec {
  BasisSpec covariate_basis;
  BasisSpec lag_basis;
  int max_lag = 0;

  int v_cov() const { return covariate_basis.n_columns(); }
  int v_lag() const { return lag_basis.n_columns(); }
  int n_columns() const { return v_cov() * v_lag(); }
  // column order is covariate-major: column(j, k) = j * v_lag + k
  int column(int j, int k) const { return j * v_lag() + k; }
};

// T x (v_cov * v_lag) design matrix for one region. Row i corresponds to the
// flattened time point i = t * 52 + w; entry (i, jk) sums the j-th covariate
// basis at the lagged series value times the k-th lag basis at that lag.
struct CrossBasis {
  std::string region;
  Eigen::MatrixXd matrix;
  bool used_burn_in = false;  // first max_lag points reused the earliest value
};

// series is the flattened (t, w) sequence; lags crossing the year boundary
// read the tail of the previous year naturally. History before the first
// point is back-filled with series.front() unless allow_burn_in is false.
CrossBasis build_crossbasis(const std::vector<double>& series, const DlnmSpec& spec,
                            const std::string& region = "", bool allow_burn_in = true);

// contrast against a reference value, summed over all lags:
// entry jk = (b_j(xi) - b_j(xi_ref)) * sum_l c_k(l)
Eigen::VectorXd contrast_vector(const DlnmSpec& spec, double xi, double xi_ref);

// single-lag contrast: entry jk = (b_j(xi) - b_j(xi_ref)) * c_k(lag).
// lag may be fractional (used by risk surfaces); integer lags must lie in
// [0, max_lag].
Eigen::VectorXd lag_contrast_vector(const DlnmSpec& spec, double xi, double xi_ref, double lag);

void write_crossbasis_csv(const CrossBasis& cb, int year_min, const std::string& path);

}  // namespace wmort
