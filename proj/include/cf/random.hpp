#pragma once

// Random instances for property runs.  All draws go through one
// std::mt19937_64 seeded from CF_SEED when set.

#include <cstdint>
#include <random>

#include "cf/body2.hpp"
#include "cf/fn1.hpp"

namespace cf {

using Rng = std::mt19937_64;

/// CF_SEED if set (decimal), else fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);
inline Rng make_rng(std::uint64_t fallback) { return Rng(seed_from_env(fallback)); }

/// Polygon cut out by m halfplanes <n, x> <= c with integer n and c a
/// multiple of 1/16, c >= |n| / 2, so it contains B/2.  Normals are spread
/// around the circle, so the result is compact.
ConvexBody2 random_polytope(Rng& rng, int m = 8, double max_offset = 2.0);

/// Continuous PL f >= 0 with f(0) = 0; sometimes flat around 0, sometimes
/// with a bounded domain.  If min_slope > 0 then f >= min_slope |x|.
ConvexFn1 random_pl(Rng& rng, double min_slope = 0.0, bool allow_flat = true);

/// C^1 piecewise quadratic with f(0) = f'(0) = 0 and f'' in [1, R]; so
/// x^2/2 <= f <= R x^2/2.
ConvexFn1 random_plq(Rng& rng, double big_r, int pieces_per_side = 4);

}  // namespace cf
