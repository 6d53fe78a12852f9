#pragma once

#include <cstdint>
#include <vector>

namespace wmort {

inline constexpr int kWeeksPerYear = 52;

// dense (age, year, week, region) tensor, week dimension fixed to 52
class Tensor4 {
 public:
  Tensor4() = default;
  Tensor4(int nx, int nt, int nr, double fill = 0.0)
      : nx_(nx), nt_(nt), nr_(nr), v_(static_cast<std::size_t>(nx) * nt * kWeeksPerYear * nr, fill) {}

  double& operator()(int x, int t, int w, int r) { return v_[idx(x, t, w, r)]; }
  double operator()(int x, int t, int w, int r) const { return v_[idx(x, t, w, r)]; }

  std::size_t idx(int x, int t, int w, int r) const {
    return ((static_cast<std::size_t>(x) * nt_ + t) * kWeeksPerYear + w) * nr_ + r;
  }

  int nx() const { return nx_; }
  int nt() const { return nt_; }
  int nr() const { return nr_; }
  std::int64_t size() const { return static_cast<std::int64_t>(v_.size()); }
  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }

  // flat index decomposition, same order as idx()
  void coords(std::int64_t i, int& x, int& t, int& w, int& r) const {
    r = static_cast<int>(i % nr_);
    i /= nr_;
    w = static_cast<int>(i % kWeeksPerYear);
    i /= kWeeksPerYear;
    t = static_cast<int>(i % nt_);
    x = static_cast<int>(i / nt_);
  }

 private:
  int nx_ = 0, nt_ = 0, nr_ = 0;
  std::vector<double> v_;
};

// dense (year, week, region) tensor
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int nt, int nr, double fill = 0.0)
      : nt_(nt), nr_(nr), v_(static_cast<std::size_t>(nt) * kWeeksPerYear * nr, fill) {}

  double& operator()(int t, int w, int r) { return v_[idx(t, w, r)]; }
  double operator()(int t, int w, int r) const { return v_[idx(t, w, r)]; }

  std::size_t idx(int t, int w, int r) const {
    return (static_cast<std::size_t>(t) * kWeeksPerYear + w) * nr_ + r;
  }

  int nt() const { return nt_; }
  int nr() const { return nr_; }
  std::int64_t size() const { return static_cast<std::int64_t>(v_.size()); }
  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }

 private:
  int nt_ = 0, nr_ = 0;
  std::vector<double> v_;
};

}  // namespace wmort
