#pragma once

// Closed convex functions f: R -> [0, inf] with f(0) = 0, stored as
// piecewise linear-quadratic (PLQ) pieces.  The effective domain is a closed
// interval [lo, hi] containing 0 (ends may be infinite); f = +inf outside.
// Each piece is 1/2 a x^2 + b x + c in global coordinates, a >= 0.
//
// PLQ is closed under +, conjugation and inf-convolution, and contains
// h(x) = x^2 / 2 exactly.  The pure piecewise linear (PL) subclass is closed
// under the A-transform.

#include <span>
#include <utility>
#include <vector>

#include "cf/common.hpp"
#include "cf/report.hpp"

namespace cf {

struct Quad {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double operator()(double x) const { return 0.5 * a * x * x + b * x + c; }
  double slope(double x) const { return a * x + b; }
  friend bool operator==(const Quad&, const Quad&) = default;
};

class ConvexFn1 {
 public:
  /// The zero function on R.
  ConvexFn1();

  /// Pieces on [lo, k_0], [k_0, k_1], ..., [k_last, hi].  Validates
  /// continuity, convexity, f(0) = 0 and f >= 0; merges equal neighbours.
  static ConvexFn1 from_pieces(double lo, double hi, std::vector<double> knots,
                               std::vector<Quad> pieces);
  /// Linear interpolation of (x, f(x)) points (strictly increasing x).
  /// A non-finite slope closes the domain at the first / last point.
  static ConvexFn1 pl(std::span<const std::pair<double, double>> points, double left_slope,
                      double right_slope);
  /// (c / 2) x^2, c >= 0.
  static ConvexFn1 quadratic(double c);
  /// max(-m_left x, m_right x) with m >= 0.
  static ConvexFn1 abs(double m_left = 1.0, double m_right = 1.0);
  /// 0 on [lo, hi], +inf elsewhere (lo <= 0 <= hi).
  static ConvexFn1 indicator(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<Quad>& pieces() const { return pieces_; }
  bool is_pl() const;
  bool is_zero() const;

  double operator()(double x) const;
  /// Index of the piece governing x (x inside the domain).
  std::size_t piece_at(double x) const;
  /// Left end of piece i (lo for i = 0) and right end (hi for the last).
  double piece_lo(std::size_t i) const { return i == 0 ? lo_ : knots_[i - 1]; }
  double piece_hi(std::size_t i) const { return i == knots_.size() ? hi_ : knots_[i]; }

  friend bool operator==(const ConvexFn1&, const ConvexFn1&) = default;

 private:
  double lo_ = -kInf;
  double hi_ = kInf;
  std::vector<double> knots_;
  std::vector<Quad> pieces_;
};

ConvexFn1 add(const ConvexFn1& f, const ConvexFn1& g);
/// s f, s > 0.
ConvexFn1 multiply(double s, const ConvexFn1& f);
/// x -> f(sqrt(a) x); maps c h to a c h and satisfies (T_a f)* = T_{1/a} f*.
ConvexFn1 scale_arg(double a, const ConvexFn1& f);

/// f*(y) = sup_x (x y - f(x)).
ConvexFn1 legendre(const ConvexFn1& f);
/// (f + g)(x) infimal convolution: slope merge for PL inputs, conjugate route otherwise.
ConvexFn1 inf_conv(const ConvexFn1& f, const ConvexFn1& g);

/// sup_{x != 0} (f - g)(x) / (x^2 / 2), clamped at 0; inf unless dom g is in dom f.
double excess_h(const ConvexFn1& f, const ConvexFn1& g);
/// rho_h with h = x^2 / 2.
double rho_h(const ConvexFn1& f, const ConvexFn1& g);
/// sup |f - g|; inf when the domains differ.
double max_abs_diff(const ConvexFn1& f, const ConvexFn1& g);
/// f <= g + tol everywhere.
bool pointwise_leq(const ConvexFn1& f, const ConvexFn1& g, double tol = 1e-12);

struct QuadBounds {
  double r = 0.0;
  double big_r = 0.0;
};
/// inf and sup of 2 f(x) / x^2 over x != 0.
QuadBounds quad_bounds(const ConvexFn1& f);

/// 1 + sqrt(1 - 1/R); C(inf) = 2.
double c_profile_lf(double big_r);
/// Holds iff r^2 + 4 r / R > 4 for (r, R) = quad_bounds(f).
ConditionReport check_legendre_theorem(const ConvexFn1& f);
ConditionReport check_legendre_theorem(double r, double big_r);

/// f^o(x) = sup{(x y - 1) / f(y) : f(y) > 0} on the polar of f^{-1}(0).
/// PL input only.
ConvexFn1 a_transform(const ConvexFn1& f);

/// sup (f - g) / h over x != 0 for PL f, g and a PL h positive off 0.
double excess_wrt(const ConvexFn1& f, const ConvexFn1& g, const ConvexFn1& h);
double rho_wrt(const ConvexFn1& f, const ConvexFn1& g, const ConvexFn1& h);

struct SampledFn {
  ConvexFn1 fn;
  double bound = 0.0;      // max interpolation error on the grid
  double extent = 0.0;
  // The A-transform pairs x with y = p / ((p-1) x); for |x| in
  // [window_lo, extent] that partner lies on the grid too.
  double window_lo = 0.0;
  double rel_bound = 0.0;  // max interpolation error / h_p over the window
};
/// c_p |x|^p, c_p = ((p-1)^(p-1) / p^p)^(1/2), interpolated on n uniform
/// cells of [-extent, extent] with tangent lines beyond.  p = 1 is |x| exactly.
SampledFn hp_construct(double p, int n = 8192, double extent = 4.0);

/// sup |f - g| / g over lo <= |x| <= hi for PL f, g with g > 0 there.
double window_rel_diff(const ConvexFn1& f, const ConvexFn1& g, double lo, double hi);
double hp_constant(double p);

/// rho_{h_sp}(f^o, (f + t h_sp)^o) <= t for f >= h_sp.
ConditionReport check_a_xh(const ConvexFn1& f, const ConvexFn1& h_sp, double t);

}  // namespace cf
