#pragma once

#include <cstdint>
#include <random>
#include <string_view>

// Reproducible random numbers. Every consumer derives an independent stream
// from (root seed, stream name, counter), so path-level parallelism never
// shares generator state. The mt19937_64 sequence and all mappings below are
// fully specified, so identical seeds give bit-identical draws.
namespace wmort::rng {

// stable 64-bit stream id (FNV-1a over name, then splitmix over seed/counter)
std::uint64_t stream_id(std::uint64_t root_seed, std::string_view name, std::uint64_t counter = 0);

class Stream {
 public:
  Stream(std::uint64_t root_seed, std::string_view name, std::uint64_t counter = 0)
      : eng_(stream_id(root_seed, name, counter)) {}
  explicit Stream(std::uint64_t raw_id) : eng_(raw_id) {}

  // uniform on (0, 1), never returns 0 or 1
  double uniform();
  double normal();                       // inverse-CDF of uniform()
  double gamma(double shape, double scale);
  double chi2(double df) { return gamma(0.5 * df, 2.0); }
  long poisson(double mean);
  // mean/dispersion parameterization: Var = mean + mean^2 / dispersion
  long neg_binomial(double mean, double dispersion);

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace wmort::rng
