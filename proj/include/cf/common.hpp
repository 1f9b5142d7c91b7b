#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cf {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Input that does not belong to the representable family of an instance
/// (non-convex data, a set missing the origin, a function with f(0) != 0, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Numeric parameters outside an operation's domain (q >= 1, r <= 1, a > b, ...).
class InvalidParameters : public std::invalid_argument {
 public:
  explicit InvalidParameters(const std::string& what) : std::invalid_argument(what) {}
};

/// Extended reciprocal on [0, inf]: 1/0 = inf, 1/inf = 0.
inline double ext_recip(double x) {
  if (x == 0.0) return kInf;
  if (std::isinf(x)) return 0.0;
  return 1.0 / x;
}

/// |x - y| with inf - inf treated as 0.
inline double ext_abs_diff(double x, double y) {
  if (std::isinf(x) && std::isinf(y)) return 0.0;
  return std::abs(x - y);
}

}  // namespace cf
