#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace wmort {

// Type-7 quantile (linear interpolation of order statistics, the R default).
// Input must be sorted ascending.
inline double quantile_type7_sorted(const std::vector<double>& x, double p) {
  if (x.empty()) throw std::invalid_argument("quantile of empty sample");
  if (p <= 0.0) return x.front();
  if (p >= 1.0) return x.back();
  const double h = (static_cast<double>(x.size()) - 1.0) * p;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const double frac = h - static_cast<double>(lo);
  if (lo + 1 >= x.size()) return x.back();
  return x[lo] + frac * (x[lo + 1] - x[lo]);
}

inline double quantile_type7(std::vector<double> x, double p) {
  std::sort(x.begin(), x.end());
  return quantile_type7_sorted(x, p);
}

inline double mean_of(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return x.empty() ? 0.0 : s / static_cast<double>(x.size());
}

inline double sample_variance(const std::vector<double>& x) {
  if (x.size() < 2) return 0.0;
  const double m = mean_of(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return ss / static_cast<double>(x.size() - 1);
}

}  // namespace wmort
