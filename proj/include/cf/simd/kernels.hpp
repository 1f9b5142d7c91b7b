#pragma once

// Data-parallel inner loops of the geometry kernel.  Each kernel has a
// portable scalar reference and, on x86-64, an AVX2 variant selected at
// runtime.  Both variants evaluate x*ux + y*uy as two products and one sum
// without fused multiply-add, so they agree bit for bit.

#include <cstddef>
#include <span>

namespace cf::simd {

enum class Isa { kScalar, kAvx2 };

/// Best instruction set available on this machine.
Isa detected_isa();
/// Instruction set currently used by the dispatching entry points.
Isa active_isa();
/// Force a variant (tests and benchmarks).  Requesting an unavailable ISA
/// falls back to scalar.
void set_active_isa(Isa isa);

/// max_i (xy[2i] * ux + xy[2i+1] * uy) over interleaved points; -inf when empty.
double max_dot(std::span<const double> xy, double ux, double uy);

/// out[j] = max_dot(xy, ux[j], uy[j]).
void max_dot_many(std::span<const double> xy, std::span<const double> ux,
                  std::span<const double> uy, std::span<double> out);

namespace scalar {
double max_dot(std::span<const double> xy, double ux, double uy);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double max_dot(std::span<const double> xy, double ux, double uy);
}  // namespace avx2
#endif

}  // namespace cf::simd
