#include "wmort/params.hpp"

#include <cmath>
#include <stdexcept>

namespace wmort {

ParamSet ParamSet::zeros(int nx, int nt, int nr, int v1, int v2) {
  ParamSet p;
  p.nx = nx;
  p.nt = nt;
  p.nr = nr;
  p.v1 = v1;
  p.v2 = v2;
  p.alpha.setZero(nx, nr);
  p.beta.setOnes(nx);
  p.kappa.setZero(nt, nr);
  p.gamma.setOnes(nx);
  p.lambda.setZero(kWeeksPerYear, nr);
  p.delta.setOnes(nx);
  p.eta1.setZero(v1 > 0 ? v1 : 0, nr);
  p.epsilon.setOnes(nx);
  p.eta2.setZero(v2 > 0 ? v2 : 0, nr);
  p.phi_age.setZero(nx);
  p.phi_region.setZero(nr);
  return p;
}

void ParamSet::enforce_constraints() {
  beta[0] = 1.0;
  gamma[0] = 1.0;
  delta[0] = 1.0;
  epsilon[0] = 1.0;
  kappa.row(0).setZero();
  lambda.row(0).setZero();
  phi_age[0] = -phi_age.tail(nx - 1).sum();
}

const char* block_name(Block b) {
  switch (b) {
    case Block::Alpha: return "alpha";
    case Block::Beta: return "beta";
    case Block::Kappa: return "kappa";
    case Block::Gamma: return "gamma";
    case Block::Lambda: return "lambda";
    case Block::Delta: return "delta";
    case Block::Eta1: return "eta1";
    case Block::Epsilon: return "epsilon";
    case Block::Eta2: return "eta2";
    case Block::PhiAge: return "phi_age";
    case Block::PhiRegion: return "phi_region";
  }
  return "?";
}

FreeMap::FreeMap(const ParamSet& p, const ModelStructure& s) {
  nx_ = p.nx;
  nt_ = p.nt;
  nr_ = p.nr;
  v1_ = p.v1;
  v2_ = p.v2;
  auto set = [&](Block b, int n) { size_[static_cast<int>(b)] = n; };
  set(Block::Alpha, nx_ * nr_);
  set(Block::Beta, nx_ - 1);
  set(Block::Kappa, (nt_ - 1) * nr_);
  if (s.week_effect) {
    set(Block::Gamma, nx_ - 1);
    set(Block::Lambda, (kWeeksPerYear - 1) * nr_);
  }
  if (s.dlnm) {
    set(Block::Delta, nx_ - 1);
    set(Block::Eta1, v1_ * nr_);
    set(Block::Epsilon, nx_ - 1);
    set(Block::Eta2, v2_ * nr_);
  }
  set(Block::PhiAge, nx_ - 1);
  set(Block::PhiRegion, nr_);

  int off = 0;
  for (int i = 0; i < 11; ++i) {
    offset_[i] = off;
    off += size_[i];
    if (size_[i] > 0) blocks_.push_back(static_cast<Block>(i));
  }
  total_ = off;
}

Block FreeMap::block_of(int k) const {
  for (int i = 10; i >= 0; --i)
    if (size_[i] > 0 && k >= offset_[i]) return static_cast<Block>(i);
  throw std::out_of_range("FreeMap::block_of");
}

std::string FreeMap::label(int k) const {
  const Block b = block_of(k);
  const int j = k - block_offset(b);
  auto idx = [&](int v) { return "[" + std::to_string(v) + "]"; };
  switch (b) {
    case Block::Alpha: return std::string("alpha") + idx(j / nr_) + idx(j % nr_);
    case Block::Beta: return std::string("beta") + idx(j + 1);
    case Block::Kappa: return std::string("kappa") + idx(j / nr_ + 1) + idx(j % nr_);
    case Block::Gamma: return std::string("gamma") + idx(j + 1);
    case Block::Lambda: return std::string("lambda") + idx(j / nr_ + 1) + idx(j % nr_);
    case Block::Delta: return std::string("delta") + idx(j + 1);
    case Block::Eta1: return std::string("eta1") + idx(j / v1_) + idx(j % v1_);  // [region][coef]
    case Block::Epsilon: return std::string("epsilon") + idx(j + 1);
    case Block::Eta2: return std::string("eta2") + idx(j / v2_) + idx(j % v2_);
    case Block::PhiAge: return std::string("phi_age") + idx(j + 1);
    case Block::PhiRegion: return std::string("phi_region") + idx(j);
  }
  return "?";
}

Eigen::VectorXd FreeMap::pack_block(Block b, const ParamSet& p) const {
  const int n = block_size(b);
  Eigen::VectorXd v(n);
  switch (b) {
    case Block::Alpha:
      for (int x = 0; x < nx_; ++x)
        for (int r = 0; r < nr_; ++r) v[x * nr_ + r] = p.alpha(x, r);
      break;
    case Block::Beta:
      for (int x = 1; x < nx_; ++x) v[x - 1] = p.beta[x];
      break;
    case Block::Kappa:
      for (int t = 1; t < nt_; ++t)
        for (int r = 0; r < nr_; ++r) v[(t - 1) * nr_ + r] = p.kappa(t, r);
      break;
    case Block::Gamma:
      for (int x = 1; x < nx_; ++x) v[x - 1] = p.gamma[x];
      break;
    case Block::Lambda:
      for (int w = 1; w < kWeeksPerYear; ++w)
        for (int r = 0; r < nr_; ++r) v[(w - 1) * nr_ + r] = p.lambda(w, r);
      break;
    case Block::Delta:
      for (int x = 1; x < nx_; ++x) v[x - 1] = p.delta[x];
      break;
    case Block::Eta1:
      for (int r = 0; r < nr_; ++r)
        for (int m = 0; m < v1_; ++m) v[r * v1_ + m] = p.eta1(m, r);
      break;
    case Block::Epsilon:
      for (int x = 1; x < nx_; ++x) v[x - 1] = p.epsilon[x];
      break;
    case Block::Eta2:
      for (int r = 0; r < nr_; ++r)
        for (int m = 0; m < v2_; ++m) v[r * v2_ + m] = p.eta2(m, r);
      break;
    case Block::PhiAge:
      for (int x = 1; x < nx_; ++x) v[x - 1] = p.phi_age[x];
      break;
    case Block::PhiRegion:
      v = p.phi_region;
      break;
  }
  return v;
}

void FreeMap::unpack_block(Block b, const Eigen::VectorXd& v, ParamSet& p) const {
  switch (b) {
    case Block::Alpha:
      for (int x = 0; x < nx_; ++x)
        for (int r = 0; r < nr_; ++r) p.alpha(x, r) = v[x * nr_ + r];
      break;
    case Block::Beta:
      for (int x = 1; x < nx_; ++x) p.beta[x] = v[x - 1];
      break;
    case Block::Kappa:
      for (int t = 1; t < nt_; ++t)
        for (int r = 0; r < nr_; ++r) p.kappa(t, r) = v[(t - 1) * nr_ + r];
      break;
    case Block::Gamma:
      for (int x = 1; x < nx_; ++x) p.gamma[x] = v[x - 1];
      break;
    case Block::Lambda:
      for (int w = 1; w < kWeeksPerYear; ++w)
        for (int r = 0; r < nr_; ++r) p.lambda(w, r) = v[(w - 1) * nr_ + r];
      break;
    case Block::Delta:
      for (int x = 1; x < nx_; ++x) p.delta[x] = v[x - 1];
      break;
    case Block::Eta1:
      for (int r = 0; r < nr_; ++r)
        for (int m = 0; m < v1_; ++m) p.eta1(m, r) = v[r * v1_ + m];
      break;
    case Block::Epsilon:
      for (int x = 1; x < nx_; ++x) p.epsilon[x] = v[x - 1];
      break;
    case Block::Eta2:
      for (int r = 0; r < nr_; ++r)
        for (int m = 0; m < v2_; ++m) p.eta2(m, r) = v[r * v2_ + m];
      break;
    case Block::PhiAge:
      for (int x = 1; x < nx_; ++x) p.phi_age[x] = v[x - 1];
      p.phi_age[0] = -p.phi_age.tail(nx_ - 1).sum();
      break;
    case Block::PhiRegion:
      p.phi_region = v;
      break;
  }
}

Eigen::VectorXd FreeMap::pack(const ParamSet& p) const {
  Eigen::VectorXd v(total_);
  for (Block b : blocks_) v.segment(block_offset(b), block_size(b)) = pack_block(b, p);
  return v;
}

void FreeMap::unpack(const Eigen::VectorXd& v, ParamSet& p) const {
  for (Block b : blocks_) unpack_block(b, v.segment(block_offset(b), block_size(b)), p);
  p.enforce_constraints();
}

}  // namespace wmort
