#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "wmort/data_model.hpp"

namespace wmort {

// Which multiplicative pieces of the predictor are active. Model 1 drops the
// week effect, Models 1-3 drop the distributed-lag terms; the national
// benchmark is the same structure fitted to a one-region aggregate.
struct ModelStructure {
  bool week_effect = true;
  bool dlnm = true;

  bool operator==(const ModelStructure&) const = default;
};

// The eleven parameter blocks. Identifiability pins beta/gamma/delta/epsilon
// at the first age to 1, kappa at the first year and lambda at week 1 to 0
// for every region, and centres the age dispersion offsets to sum to zero.
// Constrained entries are eliminated from the optimization space; ParamSet
// always stores the full arrays with the constraints imposed.
struct ParamSet {
  int nx = 0, nt = 0, nr = 0;
  int v1 = 0, v2 = 0;  // cross-basis widths (0 when the DLNM is off)

  Eigen::MatrixXd alpha;     // nx x nr, age-region level
  Eigen::VectorXd beta;      // nx, loading on kappa; beta[0] = 1
  Eigen::MatrixXd kappa;     // nt x nr, annual index; kappa(0, r) = 0
  Eigen::VectorXd gamma;     // nx, loading on lambda; gamma[0] = 1
  Eigen::MatrixXd lambda;    // 52 x nr, week effect; lambda(0, r) = 0
  Eigen::VectorXd delta;     // nx, loading on the temperature DLNM; delta[0] = 1
  Eigen::MatrixXd eta1;      // v1 x nr, temperature cross-basis coefficients
  Eigen::VectorXd epsilon;   // nx, loading on the incidence DLNM; epsilon[0] = 1
  Eigen::MatrixXd eta2;      // v2 x nr
  Eigen::VectorXd phi_age;   // nx, sums to zero
  Eigen::VectorXd phi_region;  // nr

  static ParamSet zeros(int nx, int nt, int nr, int v1, int v2);
  double dispersion(int x, int r) const { return std::exp(phi_age[x] + phi_region[r]); }
  void enforce_constraints();  // re-imposes the pinned entries exactly
};

enum class Block {
  Alpha, Beta, Kappa, Gamma, Lambda, Delta, Eta1, Epsilon, Eta2, PhiAge, PhiRegion
};

const char* block_name(Block b);

// Free-coordinate layout over the active blocks, in Block enum order.
// pack/unpack map between a flat vector and the constrained ParamSet.
class FreeMap {
 public:
  FreeMap() = default;
  FreeMap(const ParamSet& p, const ModelStructure& s);

  int total() const { return total_; }
  bool active(Block b) const { return size_[static_cast<int>(b)] > 0; }
  int block_size(Block b) const { return size_[static_cast<int>(b)]; }
  int block_offset(Block b) const { return offset_[static_cast<int>(b)]; }
  const std::vector<Block>& blocks() const { return blocks_; }
  Block block_of(int free_index) const;
  std::string label(int free_index) const;  // e.g. "kappa[1995,R2]"

  Eigen::VectorXd pack(const ParamSet& p) const;
  void unpack(const Eigen::VectorXd& v, ParamSet& p) const;
  // per-block variants operating on the block's own coordinates
  Eigen::VectorXd pack_block(Block b, const ParamSet& p) const;
  void unpack_block(Block b, const Eigen::VectorXd& v, ParamSet& p) const;

 private:
  int nx_ = 0, nt_ = 0, nr_ = 0, v1_ = 0, v2_ = 0;
  int total_ = 0;
  int size_[11] = {0};
  int offset_[11] = {0};
  std::vector<Block> blocks_;
};

}  // namespace wmort
