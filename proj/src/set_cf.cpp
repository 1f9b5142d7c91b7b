#include "cf/set_cf.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "cf/scalar.hpp"

namespace cf {

namespace {

constexpr double kMargin = 1e-9;

ConditionReport constant_theorem(double r, double big_r, bool compact) {
  ConditionReport rep;
  rep.criterion = "constant-theorem";
  rep.param("r", r).param("R", big_r);
  constexpr double eps = 1e-12;
  if (r > 1.0 + eps) {
    rep.verdict = Verdict::kHolds;
    rep.note = "case (i): r > 1";
  } else if (std::abs(r - 1.0) <= eps) {
    rep.verdict = compact ? Verdict::kHolds : Verdict::kFails;
    rep.note = compact ? "case (ii): r = 1, compact" : "case (ii) needs a compact set";
  } else if (r > 0.0) {
    const double limit = r / (1.0 - r);
    rep.witness(0, limit, "r/(1-r)");
    rep.verdict = big_r < limit ? Verdict::kHolds : Verdict::kFails;
    rep.note = rep.holds() ? "case (iii): R < r/(1-r)" : "case (iii) fails: R >= r/(1-r)";
  } else {
    rep.verdict = Verdict::kFails;
    rep.note = "r = 0: origin on the boundary";
  }
  return rep;
}

ConvexBody2 centred_segment(Vec2 v) { return segment(-1.0 * v, v); }

}  // namespace

ConvexBody2 SetInstance::self_polar() const { return ball_ngon(1.0, 256); }

ApproximantTrace<ConvexBody2> set_cf_trace(const SetCFProblem& problem) {
  return approximant_trace(SetInstance{}, problem.terms, problem.max_iter, problem.tol);
}

ApproximantTrace<double> ball_trace(double r, std::size_t max_n, double tol) {
  if (!(r > 0.0)) throw InvalidParameters("ball radius must be positive");
  return approximant_trace(ScalarInstance{}, TermSequence<double>::constant(r), max_n, tol);
}

ConditionReport check_constant_theorem(const ConvexBody2& k) {
  return constant_theorem(inradius_centered(k), norm(k), k.is_bounded());
}

ConditionReport check_constant_theorem_disk(double r) {
  if (!(r > 0.0)) throw InvalidParameters("disk radius must be positive");
  ConditionReport rep = constant_theorem(r, r, true);
  rep.note += " (exact disk, R = r)";
  return rep;
}

ConditionReport check_nec_suf(const ConvexBody2& k, std::size_t k_max) {
  if (k_max < 1) throw InvalidParameters("k_max must be at least 1");
  ConditionReport rep;
  rep.criterion = "nec-suf";
  rep.param("k_max", static_cast<double>(k_max));
  if (k == ConvexBody2::origin()) {
    rep.verdict = Verdict::kNotApplicable;
    rep.note = "term is {0}";
    return rep;
  }
  const auto zs = approximants(SetInstance{}, TermSequence<ConvexBody2>::constant(k), 2 * k_max - 1);
  rep.verdict = Verdict::kFails;
  for (std::size_t j = 1; j <= k_max; ++j) {
    const double nrm = norm(zs[2 * j - 2]);
    rep.witness(static_cast<long>(j), nrm, "norm F_" + std::to_string(2 * j - 1));
    if (nrm <= 1.0 - kMargin) {
      rep.verdict = Verdict::kHolds;
      rep.param("k", static_cast<double>(j)).param("a", nrm);
      return rep;
    }
  }
  rep.note = "no odd approximant inside aB with a < 1";
  return rep;
}

ConditionReport polar_lipschitz_check(const ConvexBody2& k, const ConvexBody2& l) {
  ConditionReport rep;
  rep.criterion = "polar-lipschitz";
  if (!k.is_bounded() || !l.is_bounded() || inradius_centered(k) <= 0.0 ||
      inradius_centered(l) <= 0.0) {
    rep.verdict = Verdict::kNotApplicable;
    rep.note = "needs compact sets with the origin in the interior";
    return rep;
  }
  const ConvexBody2 kp = polar(k);
  const ConvexBody2 lp = polar(l);
  const double lhs = hausdorff(kp, lp);
  const double m = std::max(norm(kp), norm(lp));
  const double rhs = m * m * hausdorff(k, l);
  rep.witness(0, lhs, "rho(K*,L*)").witness(1, rhs, "bound").witness(2, rhs - lhs, "slack");
  rep.verdict = lhs <= rhs * (1.0 + 1e-12) + 1e-12 ? Verdict::kHolds : Verdict::kFails;
  return rep;
}

double parallelogram_inradius(Vec2 u, Vec2 w, double b) {
  const double c = std::abs(cross(u, w));
  return std::min(c / norm(w), b * c / norm(u));
}

ConditionReport three_segment_condition(Vec2 u1, Vec2 u2, Vec2 u3) {
  const std::array<Vec2, 3> u{u1, u2, u3};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (norm(u[i]) == 0.0 || std::abs(cross(u[i], u[j])) <= 1e-12 * norm(u[i]) * norm(u[j])) {
        throw InvalidInput("three-segment condition needs pairwise non-collinear vectors");
      }
    }
  }
  ConditionReport rep;
  rep.criterion = "three-segment";
  std::array<int, 3> p{0, 1, 2};
  double worst = kInf;
  double worst_kernel_gap = 0.0;
  long idx = 0;
  do {
    const double b = 1.0 / (1.0 + std::abs(dot(u[p[1]], u[p[2]])));
    const double exact = parallelogram_inradius(u[p[0]], u[p[2]], b);
    const ConvexBody2 sum =
        minkowski_sum(centred_segment(u[p[0]]), centred_segment(b * u[p[2]]));
    worst_kernel_gap = std::max(worst_kernel_gap, std::abs(inradius_centered(sum) - exact));
    rep.witness(idx++, exact,
                "perm " + std::to_string(p[0] + 1) + std::to_string(p[1] + 1) + std::to_string(p[2] + 1));
    worst = std::min(worst, exact);
  } while (std::next_permutation(p.begin(), p.end()));

  // (K_a + K_b*)* against the closed form on every ordered pair.
  double identity_err = 0.0;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      if (a == b) continue;
      const ConvexBody2 lhs = polar(minkowski_sum(centred_segment(u[a]), polar(centred_segment(u[b]))));
      const ConvexBody2 rhs = centred_segment((1.0 / (1.0 + std::abs(dot(u[a], u[b])))) * u[b]);
      identity_err = std::max(identity_err, hausdorff(lhs, rhs));
    }
  }
  rep.param("a", worst);
  rep.witness(6, identity_err, "identity error").witness(7, worst_kernel_gap, "kernel inradius error");
  rep.verdict = worst > 1.0 + kMargin ? Verdict::kHolds : Verdict::kFails;
  if (identity_err > 1e-9 || worst_kernel_gap > 1e-9) {
    rep.verdict = Verdict::kFails;
    rep.note = "kernel disagrees with the closed form";
  } else if (!rep.holds()) {
    rep.note = "some permutation has inradius <= 1";
  }
  return rep;
}

LengthSearch three_segment_min_length(Vec2 d1, Vec2 d2, Vec2 d3, double l_lo, double l_hi,
                                      double tol) {
  if (!(l_lo > 0.0) || !(l_hi > l_lo)) throw InvalidParameters("need 0 < l_lo < l_hi");
  d1 = unit(d1);
  d2 = unit(d2);
  d3 = unit(d3);
  auto margin = [&](double len) {
    return three_segment_condition(len * d1, len * d2, len * d3).parameter("a");
  };
  LengthSearch out;
  constexpr int kSteps = 400;
  const double ratio = std::pow(l_hi / l_lo, 1.0 / kSteps);
  double prev = l_lo;
  for (int i = 0; i <= kSteps; ++i) {
    const double len = l_lo * std::pow(ratio, i);
    const double m = margin(len);
    if (m > out.best_inradius) {
      out.best_inradius = m;
      out.best_length = len;
    }
    if (m > 1.0 + kMargin) {
      double lo = i == 0 ? len : prev;
      double hi = len;
      while (hi - lo > tol * hi) {
        const double mid = 0.5 * (lo + hi);
        (margin(mid) > 1.0 + kMargin ? hi : lo) = mid;
      }
      out.minimal_length = hi;
      return out;
    }
    prev = len;
  }
  return out;
}

ConditionReport periodic_two_condition(const ConvexBody2& k, const ConvexBody2& l) {
  ConditionReport rep;
  rep.criterion = "periodic-two";
  const double a = inradius_centered(minkowski_sum(k, polar(minkowski_sum(l, polar(k)))));
  const double b = inradius_centered(minkowski_sum(l, polar(minkowski_sum(k, polar(l)))));
  rep.witness(0, a, "inradius K+(L+K*)*").witness(1, b, "inradius L+(K+L*)*");
  rep.param("a", std::min(a, b));
  rep.verdict = std::min(a, b) > 1.0 + kMargin ? Verdict::kHolds : Verdict::kFails;
  return rep;
}

std::vector<ScalingRow> fixed_point_scaling(const ConvexBody2& k, std::span<const double> t_grid,
                                            double beta, double tol, std::size_t max_iter) {
  const ConvexBody2 kp = polar(k);
  std::vector<ScalingRow> rows;
  for (const double t : t_grid) {
    if (!(t > 0.0)) throw InvalidParameters("scaling grid needs t > 0");
    SetCFProblem prob;
    prob.terms = TermSequence<ConvexBody2>::constant(scale(t, k));
    prob.tol = tol;
    prob.max_iter = max_iter;
    const auto trace = set_cf_trace(prob);
    ScalingRow row;
    row.t = t;
    row.converged = trace.verdict == TraceVerdict::kConverged;
    row.z = trace.limit_estimate ? *trace.limit_estimate : trace.entries.back().z;
    row.scaled = scale(std::pow(t, beta), row.z);
    row.scaled_norm = norm(row.scaled);
    row.scaled_inradius = inradius_centered(row.scaled);
    row.dist_to_x = hausdorff(row.scaled, k);
    row.dist_to_polar = hausdorff(row.scaled, kp);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cf
