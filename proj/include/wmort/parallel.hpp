#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Deterministic parallel reductions. Scalar sums over cells go through a
// per-cell buffer followed by a serial pairwise sum, so the result is
// bit-identical regardless of thread count. Vector/matrix accumulators use
// one accumulator per chunk combined in chunk order, which is bit-reproducible
// at a fixed thread count and agrees across thread counts to ~1e-10 relative.
namespace wmort::par {

inline int& thread_setting() {
  static int n = 0;  // 0 = use OpenMP default
  return n;
}

inline void set_threads(int n) {
  thread_setting() = n;
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#endif
}

inline int threads() {
#ifdef _OPENMP
  int n = thread_setting();
  return n > 0 ? n : omp_get_max_threads();
#else
  return 1;
#endif
}

// f(chunk_id, begin, end); chunks are contiguous and cover [0, n)
template <class F>
void for_chunks(std::int64_t n, F&& f) {
  const int nc = threads();
  if (nc <= 1 || n < 2) {
    f(0, std::int64_t{0}, n);
    return;
  }
  const std::int64_t step = (n + nc - 1) / nc;
#pragma omp parallel for schedule(static, 1)
  for (int c = 0; c < nc; ++c) {
    const std::int64_t b = static_cast<std::int64_t>(c) * step;
    const std::int64_t e = b + step < n ? b + step : n;
    if (b < e) f(c, b, e);
  }
}

// recursive pairwise sum, blocks of 64 at the leaves
inline double pairwise_sum(const double* x, std::int64_t n) {
  if (n <= 64) {
    double s = 0.0;
    for (std::int64_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::int64_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

// Sum per_cell(i) over i in [0, n). Buffer fill is parallel, the final
// pairwise pass is serial: bit-identical for any thread count.
template <class G>
double sum_cells(std::int64_t n, G&& per_cell) {
  std::vector<double> buf(static_cast<std::size_t>(n));
  for_chunks(n, [&](int, std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) buf[static_cast<std::size_t>(i)] = per_cell(i);
  });
  return pairwise_sum(buf.data(), n);
}

}  // namespace wmort::par
