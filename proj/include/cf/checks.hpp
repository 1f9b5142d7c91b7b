#pragma once

// Convergence criteria that only depend on scalar bounds r_n h <= x_n <= R_n h
// and on the instance's Lipschitz profile.

#include <cstddef>
#include <functional>
#include <span>
#include <utility>

#include "cf/profile.hpp"
#include "cf/report.hpp"

namespace cf {

struct SandwichBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Scalar brackets [R_1, r_2, ..., a_n] <= z_n / h <= [r_1, R_2, ..., b_n]
/// with a_n = r_n, b_n = R_n for even n and the reverse for odd n.
SandwichBounds sandwich_bounds(std::span<const double> r, std::span<const double> big_r,
                               std::size_t n);

/// Simple criterion for exact profiles: (i) r > 1, (ii) r = 1 and R < inf,
/// (iii) r < 1 and R <= r / (1 - r).  Refuses profiles with C != 1.
ConditionReport check_uniform_simple(double r, double big_r, const LipschitzProfile& profile);

/// Uniform-bounds theorem: holds iff C(upsilon(R,r)/upsilon(r,R)) / upsilon(r,R) < 1.
/// The quotient is reported as the q certificate (any q above it works).
ConditionReport check_urr(double r, double big_r, const LipschitzProfile& profile);

/// Variable-terms criterion: liminf n log(r_n r_{n+1} C((R_n + 1/r_{n+1}) / r_n)^{-2}) > 1,
/// evaluated over n <= horizon.  Sequences are 1-based.
ConditionReport check_variable_terms(const std::function<double(std::size_t)>& r,
                                     const std::function<double(std::size_t)>& big_r,
                                     const LipschitzProfile& profile, std::size_t horizon);

/// q^{2(n - 2k)} / ((1 - q^2) r): a-posteriori bound on rho(z_n, z).
double a_posteriori_error(double q, std::size_t k, double r, std::size_t n);

}  // namespace cf
