#include "wmort/rng.hpp"

#include <cmath>
#include <stdexcept>

#include "wmort/special.hpp"

namespace wmort::rng {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t stream_id(std::uint64_t root_seed, std::string_view name, std::uint64_t counter) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(root_seed ^ h) + counter);
}

double Stream::uniform() {
  // 53-bit mantissa, shifted to (0,1)
  const std::uint64_t r = eng_() >> 11;
  double u = (static_cast<double>(r) + 0.5) * (1.0 / 9007199254740992.0);
  return u;
}

double Stream::normal() { return sf::norm_quantile(uniform()); }

double Stream::gamma(double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0)) throw std::invalid_argument("gamma: bad parameters");
  if (shape < 1.0) {
    // boost to shape+1 then scale back (Marsaglia-Tsang)
    const double u = uniform();
    return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
  }
}

long Stream::poisson(double mean) {
  if (mean < 0.0) throw std::invalid_argument("poisson: negative mean");
  if (mean == 0.0) return 0;
  if (mean < 30.0) {
    // inversion by sequential search
    const double l = std::exp(-mean);
    double p = 1.0;
    long k = 0;
    do {
      ++k;
      p *= uniform();
    } while (p > l);
    return k - 1;
  }
  // PTRS transformed rejection (Hoermann 1993)
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    double u = uniform() - 0.5;
    double v = uniform();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<long>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * std::log(mean) - mean - std::lgamma(k + 1.0)) {
      return static_cast<long>(k);
    }
  }
}

long Stream::neg_binomial(double mean, double dispersion) {
  if (mean < 0.0 || !(dispersion > 0.0)) throw std::invalid_argument("neg_binomial: bad parameters");
  if (mean == 0.0) return 0;
  // gamma-Poisson mixture
  const double rate = gamma(dispersion, mean / dispersion);
  return poisson(rate);
}

}  // namespace wmort::rng
