#include "cf/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <limits>

namespace cf::simd::avx2 {

__attribute__((target("avx2"))) double max_dot(std::span<const double> xy, double ux, double uy) {
  const std::size_t n = xy.size() / 2;
  const double* p = xy.data();
  const __m256d u = _mm256_setr_pd(ux, uy, ux, uy);
  __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());

  std::size_t i = 0;
  // 4 points (8 doubles) per iteration.
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_mul_pd(_mm256_loadu_pd(p + 2 * i), u);
    const __m256d b = _mm256_mul_pd(_mm256_loadu_pd(p + 2 * i + 4), u);
    // [a0+a1, b0+b1, a2+a3, b2+b3]
    best = _mm256_max_pd(best, _mm256_hadd_pd(a, b));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = lanes[0];
  for (int k = 1; k < 4; ++k) out = lanes[k] > out ? lanes[k] : out;

  for (; i < n; ++i) {
    const double px = p[2 * i] * ux;
    const double py = p[2 * i + 1] * uy;
    const double d = px + py;
    if (d > out) out = d;
  }
  return out;
}

}  // namespace cf::simd::avx2

#endif
