#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cf/common.hpp"
#include "cf/profile.hpp"
#include "cf/report.hpp"
#include "cf/semigroup.hpp"

namespace cf {

/// [0, inf] with ordinary addition and x* = 1/x.  h = 1 is self-polar and
/// rho_h(x, y) = |x - y|.
class ScalarInstance {
 public:
  using value_type = double;

  double add(double x, double y) const { return x + y; }
  double involute(double x) const { return ext_recip(x); }
  double scale(double a, double x) const;
  bool leq(double x, double y, double tol) const { return x <= y + tol; }
  double neutral() const { return 0.0; }
  double top() const { return kInf; }
  double self_polar() const { return 1.0; }
  double rho(double x, double y) const;
  double lower_ratio(double x) const { return x; }
  double upper_ratio(double x) const { return x; }
  const LipschitzProfile& profile() const { return profile_; }
  void validate(double x) const;

 private:
  LipschitzProfile profile_ = LipschitzProfile::exact();
};

/// upsilon(r, R) = [r, R, r, R, ...]^{-1} = (sqrt(r^2 + 4r/R) + r) / 2.
double upsilon(double r, double big_r);

/// Limit of [r, R, r, R, ...], i.e. 1 / upsilon(r, R).
double periodic_limit(double r, double big_r);

/// [b_1, ..., b_n] by the classical bottom-up evaluation.
double scalar_cf(std::span<const double> terms);
double scalar_cf(std::span<const double> terms, std::size_t n);

/// Empirical Seidel-Stern classification of [b_1, b_2, ...] over a horizon of
/// N terms: converges iff the partial sums grow without bound.  Reports the
/// partial sum and the even/odd approximant gap.
ConditionReport seidel_stern_verdict(const TermSequence<double>& terms, std::size_t horizon);

}  // namespace cf
