#pragma once

// Continued fractions of planar convex bodies containing the origin:
// addition is the Minkowski sum (or the convex hull of the union), the
// involution is the polar, and the metric is the Hausdorff distance, i.e.
// rho_h with h the unit disk.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cf/body2.hpp"
#include "cf/profile.hpp"
#include "cf/report.hpp"
#include "cf/semigroup.hpp"

namespace cf {

class SetInstance {
 public:
  using value_type = ConvexBody2;

  ConvexBody2 add(const ConvexBody2& x, const ConvexBody2& y) const { return minkowski_sum(x, y); }
  ConvexBody2 involute(const ConvexBody2& x) const { return polar(x); }
  ConvexBody2 scale(double a, const ConvexBody2& x) const { return cf::scale(a, x); }
  bool leq(const ConvexBody2& x, const ConvexBody2& y, double tol) const { return included(x, y, tol); }
  ConvexBody2 neutral() const { return ConvexBody2::origin(); }
  ConvexBody2 top() const { return ConvexBody2::whole_plane(); }
  /// Polygonal stand-in for the unit disk; the metric itself uses the exact disk.
  ConvexBody2 self_polar() const;
  double rho(const ConvexBody2& x, const ConvexBody2& y) const { return hausdorff(x, y); }
  double lower_ratio(const ConvexBody2& x) const { return inradius_centered(x); }
  double upper_ratio(const ConvexBody2& x) const { return norm(x); }
  const LipschitzProfile& profile() const { return profile_; }
  void validate(const ConvexBody2&) const {}

 private:
  LipschitzProfile profile_ = LipschitzProfile::exact();
};

/// Same as SetInstance with K v L = conv(K u L) in place of K + L.
class HullSetInstance : public SetInstance {
 public:
  ConvexBody2 add(const ConvexBody2& x, const ConvexBody2& y) const { return hull_union(x, y); }
};

struct SetCFProblem {
  TermSequence<ConvexBody2> terms = TermSequence<ConvexBody2>::constant(ConvexBody2::origin());
  double tol = 1e-10;
  std::size_t max_iter = 100;
};

ApproximantTrace<ConvexBody2> set_cf_trace(const SetCFProblem& problem);

/// Radii of F_n = [rB, rB, ...] through the scalar reduction F_n = [r,...,r]_n B.
ApproximantTrace<double> ball_trace(double r, std::size_t max_n, double tol);

/// Constant-term theorem with r = inradius(K), R = norm(K):
/// (i) r > 1, (ii) r = 1 and K compact, (iii) 0 < r < 1 and R < r/(1-r).
ConditionReport check_constant_theorem(const ConvexBody2& k);
/// Same, for the exact disk rB (r = R).
ConditionReport check_constant_theorem_disk(double r);

/// Holds iff norm(F_{2k-1}) <= 1 - 1e-9 for some k <= k_max, constant term K.
ConditionReport check_nec_suf(const ConvexBody2& k, std::size_t k_max);

/// rho(K*, L*) <= max(|K*|, |L*|)^2 rho(K, L) for compact K, L with 0 inside.
ConditionReport polar_lipschitz_check(const ConvexBody2& k, const ConvexBody2& l);

/// Inradius of [-u, u] + b [-w, w] in closed form.
double parallelogram_inradius(Vec2 u, Vec2 w, double b);

/// Minimum over the 6 permutations of the inradius of
/// [-u_i1, u_i1] + 1/(1 + |<u_i2, u_i3>|) [-u_i3, u_i3]; holds iff > 1.
/// Also checks (K_a + K_b*)* = 1/(1 + |<v_a, v_b>|) K_b on the kernel.
ConditionReport three_segment_condition(Vec2 u1, Vec2 u2, Vec2 u3);

struct LengthSearch {
  std::optional<double> minimal_length;  // smallest L with the condition holding
  double best_inradius = 0.0;            // sup of the margin seen on the scan
  double best_length = 0.0;
};
/// Scales unit directions d_i by a common L in [l_lo, l_hi]; scans then bisects.
LengthSearch three_segment_min_length(Vec2 d1, Vec2 d2, Vec2 d3, double l_lo, double l_hi,
                                      double tol = 1e-9);

/// Inradii of K + (L + K*)* and L + (K + L*)*; holds iff both exceed 1.
ConditionReport periodic_two_condition(const ConvexBody2& k, const ConvexBody2& l);

struct ScalingRow {
  double t = 0.0;
  ConvexBody2 z;         // limit for the constant term tK
  ConvexBody2 scaled;    // t^beta z
  double scaled_norm = 0.0;
  double scaled_inradius = 0.0;
  double dist_to_x = 0.0;      // rho(t^beta z, K)
  double dist_to_polar = 0.0;  // rho(t^beta z, K*)
  bool converged = false;
};
/// Fixed point z_t of z* = z + tK for each t, reported scaled by t^beta.
std::vector<ScalingRow> fixed_point_scaling(const ConvexBody2& k, std::span<const double> t_grid,
                                            double beta = 1.0, double tol = 1e-10,
                                            std::size_t max_iter = 200);

}  // namespace cf
