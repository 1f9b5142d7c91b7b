#include <limits>

#include "cf/simd/kernels.hpp"

namespace cf::simd::scalar {

double max_dot(std::span<const double> xy, double ux, double uy) {
  double best = -std::numeric_limits<double>::infinity();
  const std::size_t n = xy.size() / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const double px = xy[2 * i] * ux;
    const double py = xy[2 * i + 1] * uy;
    const double d = px + py;
    if (d > best) best = d;
  }
  return best;
}

}  // namespace cf::simd::scalar
