#pragma once

#include <Eigen/Core>
#include <vector>

#include "wmort/crossbasis.hpp"
#include "wmort/data_model.hpp"
#include "wmort/params.hpp"

namespace wmort {

// graph Laplacian: degree on the diagonal, -1 between neighbours
Eigen::MatrixXd build_laplacian(const RegionGraph& graph);

struct PenaltyConfig {
  double psi1 = 0.0;
  double psi2 = 0.0;
  Eigen::MatrixXd laplacian;  // nr x nr, symmetric PSD with zero row sums
};

// Everything the likelihood kernels read: the panel, the per-region
// cross-bases (rows indexed t*52+w) and the spatial penalty.
struct ModelData {
  const MortalityPanel* panel = nullptr;
  ModelStructure structure;
  std::vector<CrossBasis> z1, z2;  // per region; empty when dlnm is off
  PenaltyConfig penalty;

  int v1() const { return z1.empty() ? 0 : static_cast<int>(z1.front().matrix.cols()); }
  int v2() const { return z2.empty() ? 0 : static_cast<int>(z2.front().matrix.cols()); }
  ParamSet make_params() const;
};

// log mu(x,t,w,r) = alpha + beta*kappa + gamma*lambda + delta*(Z1 eta1) + epsilon*(Z2 eta2);
// disabled terms are skipped. baseline_only additionally drops the DLNM part.
Tensor4 log_mu(const ParamSet& p, const ModelData& data, bool baseline_only = false);

// negative binomial log-likelihood, summed over all cells.
// log(E*mu) is formed as log(E) + log_mu so large predictors never round-trip
// through exp.
double nb_loglik(const ParamSet& p, const ModelData& data);

// (psi/2) * sum over cross-basis columns of the Laplacian quadratic form
double penalty_value(const ParamSet& p, const ModelData& data);
double penalized_loglik(const ParamSet& p, const ModelData& data);

// Per-cell derivative fields of the cell log-likelihood l(u, phi) where
// u = log mu and phi = exp(phi_age + phi_region):
//   lu = dl/du, luu = d2l/du2, lphi = dl/dphi, lphiphi = d2l/dphi2,
//   luphi = d2l/(du dphi)
// Every block derivative is assembled from these by chain rule.
struct CellDerivs {
  Tensor4 lu, luu;
  Tensor4 lphi, lphiphi;
  Tensor4 luphi;
  bool has_u = false, has_phi = false, has_cross = false;
};

void compute_cell_derivs(const ParamSet& p, const ModelData& data, bool want_u, bool want_phi,
                         bool want_cross, CellDerivs& out);

// analytic first/second derivatives of the penalized log-likelihood with
// respect to one block, over that block's free coordinates
Eigen::VectorXd gradient_block(Block b, const ParamSet& p, const ModelData& data,
                               const CellDerivs& cd);
Eigen::MatrixXd hessian_block(Block b, const ParamSet& p, const ModelData& data,
                              const CellDerivs& cd);

// dense symmetric Hessian over all free coordinates, cross-block terms
// included; `penalized` adds the Laplacian curvature on the eta blocks
Eigen::MatrixXd full_hessian(const ParamSet& p, const ModelData& data, const FreeMap& fm,
                             bool penalized);

}  // namespace wmort
