#include <atomic>

#include "cf/simd/kernels.hpp"

namespace cf::simd {

namespace {

Isa probe() {
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::kAvx2;
#endif
  return Isa::kScalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && detected_isa() != Isa::kAvx2) isa = Isa::kScalar;
  active().store(isa, std::memory_order_relaxed);
}

double max_dot(std::span<const double> xy, double ux, double uy) {
#if defined(__x86_64__) || defined(_M_X64)
  if (active_isa() == Isa::kAvx2) return avx2::max_dot(xy, ux, uy);
#endif
  return scalar::max_dot(xy, ux, uy);
}

void max_dot_many(std::span<const double> xy, std::span<const double> ux,
                  std::span<const double> uy, std::span<double> out) {
  const std::size_t m = out.size();
  for (std::size_t j = 0; j < m; ++j) out[j] = max_dot(xy, ux[j], uy[j]);
}

}  // namespace cf::simd
