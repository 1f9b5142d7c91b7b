#pragma once

// Continued fractions of convex functions on the line with f(0) = 0, f >= 0.
// Addition is pointwise.  Two involutions: the convex conjugate (metric
// rho_h, h = x^2/2) and the A-transform (metric built from a self-polar
// h_sp, |x| by default).

#include <cstddef>

#include "cf/fn1.hpp"
#include "cf/profile.hpp"
#include "cf/semigroup.hpp"

namespace cf {

class LFInstance {
 public:
  using value_type = ConvexFn1;

  ConvexFn1 add(const ConvexFn1& x, const ConvexFn1& y) const { return cf::add(x, y); }
  ConvexFn1 involute(const ConvexFn1& x) const { return legendre(x); }
  // The conjugate of f(sqrt(a) x) is f*(x / sqrt(a)), so T_a commutes with * up to 1/a.
  ConvexFn1 scale(double a, const ConvexFn1& x) const { return scale_arg(a, x); }
  bool leq(const ConvexFn1& x, const ConvexFn1& y, double tol) const { return pointwise_leq(x, y, tol); }
  ConvexFn1 neutral() const { return ConvexFn1{}; }
  ConvexFn1 top() const { return ConvexFn1::indicator(0.0, 0.0); }
  ConvexFn1 self_polar() const { return ConvexFn1::quadratic(1.0); }
  double rho(const ConvexFn1& x, const ConvexFn1& y) const { return rho_h(x, y); }
  double lower_ratio(const ConvexFn1& x) const { return quad_bounds(x).r; }
  double upper_ratio(const ConvexFn1& x) const { return quad_bounds(x).big_r; }
  const LipschitzProfile& profile() const { return profile_; }
  void validate(const ConvexFn1&) const {}

 private:
  LipschitzProfile profile_ = LipschitzProfile::legendre_fenchel();
};

class AInstance {
 public:
  using value_type = ConvexFn1;

  AInstance() : h_(ConvexFn1::abs()) {}
  /// h_sp must be PL, positive off 0 and finite everywhere.
  explicit AInstance(ConvexFn1 h_sp);

  ConvexFn1 add(const ConvexFn1& x, const ConvexFn1& y) const { return cf::add(x, y); }
  ConvexFn1 involute(const ConvexFn1& x) const { return a_transform(x); }
  ConvexFn1 scale(double a, const ConvexFn1& x) const { return multiply(a, x); }
  bool leq(const ConvexFn1& x, const ConvexFn1& y, double tol) const { return pointwise_leq(x, y, tol); }
  ConvexFn1 neutral() const { return ConvexFn1{}; }
  ConvexFn1 top() const { return ConvexFn1::indicator(0.0, 0.0); }
  ConvexFn1 self_polar() const { return h_; }
  double rho(const ConvexFn1& x, const ConvexFn1& y) const { return rho_wrt(x, y, h_); }
  double lower_ratio(const ConvexFn1& x) const;
  double upper_ratio(const ConvexFn1& x) const;
  const LipschitzProfile& profile() const { return profile_; }
  void validate(const ConvexFn1& x) const;

 private:
  ConvexFn1 h_;
  LipschitzProfile profile_ = LipschitzProfile::exact();
};

struct FnCFProblem {
  TermSequence<ConvexFn1> terms = TermSequence<ConvexFn1>::constant(ConvexFn1{});
  double tol = 1e-10;
  std::size_t max_iter = 100;
};

ApproximantTrace<ConvexFn1> lf_trace(const FnCFProblem& problem);
ApproximantTrace<ConvexFn1> a_trace(const FnCFProblem& problem, const AInstance& inst = {});

/// gamma with [c h, c h, ...] -> gamma h: the positive root of g^2 + c g = 1.
double lf_constant_limit(double c);

/// rho_h(f*, (f + t h)*) <= C_R^2 t with R from quad_bounds(f); needs h <= f.
ConditionReport lf_lipschitz_check(const ConvexFn1& f, double t);

}  // namespace cf
