#include "cf/fn_cf.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cf {

namespace {

double right_slope_at(const ConvexFn1& f, double x) {
  return f.pieces()[f.piece_at(std::nextafter(x, kInf))].slope(x);
}
double left_slope_at(const ConvexFn1& f, double x) {
  return f.pieces()[f.piece_at(std::nextafter(x, -kInf))].slope(x);
}

// inf and sup of f / h over x != 0 for PL f, h with dom h = R.  The ratio is
// monotone between knots, so knots plus the limits at 0 and at the tails do.
std::pair<double, double> ratio_range(const ConvexFn1& f, const ConvexFn1& h) {
  std::vector<double> vals;
  std::vector<double> xs(f.knots().begin(), f.knots().end());
  xs.insert(xs.end(), h.knots().begin(), h.knots().end());
  if (std::isfinite(f.lo())) xs.push_back(f.lo());
  if (std::isfinite(f.hi())) xs.push_back(f.hi());
  for (const double x : xs) {
    if (x != 0.0 && x >= f.lo() && x <= f.hi()) vals.push_back(f(x) / h(x));
  }
  if (f.hi() > 0.0) vals.push_back(right_slope_at(f, 0.0) / right_slope_at(h, 0.0));
  if (f.lo() < 0.0) vals.push_back(left_slope_at(f, 0.0) / left_slope_at(h, 0.0));
  bool unbounded = false;
  if (std::isinf(f.hi())) {
    vals.push_back(f.pieces().back().b / h.pieces().back().b);
  } else {
    unbounded = true;
  }
  if (std::isinf(f.lo())) {
    vals.push_back(f.pieces().front().b / h.pieces().front().b);
  } else {
    unbounded = true;
  }
  if (vals.empty()) return {kInf, kInf};  // f = indicator of {0}
  const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
  return {*lo, unbounded ? kInf : *hi};
}

}  // namespace

AInstance::AInstance(ConvexFn1 h_sp) : h_(std::move(h_sp)) {
  if (!h_.is_pl()) throw InvalidInput("h_sp must be piecewise linear");
  if (std::isfinite(h_.lo()) || std::isfinite(h_.hi())) throw InvalidInput("h_sp must be finite everywhere");
  if (!(right_slope_at(h_, 0.0) > 0.0) || !(left_slope_at(h_, 0.0) < 0.0)) {
    throw InvalidInput("h_sp must be positive off the origin");
  }
}

double AInstance::lower_ratio(const ConvexFn1& x) const { return ratio_range(x, h_).first; }
double AInstance::upper_ratio(const ConvexFn1& x) const { return ratio_range(x, h_).second; }

void AInstance::validate(const ConvexFn1& x) const {
  if (!x.is_pl()) throw InvalidInput("A-transform terms must be piecewise linear");
}

ApproximantTrace<ConvexFn1> lf_trace(const FnCFProblem& problem) {
  return approximant_trace(LFInstance{}, problem.terms, problem.max_iter, problem.tol);
}

ApproximantTrace<ConvexFn1> a_trace(const FnCFProblem& problem, const AInstance& inst) {
  return approximant_trace(inst, problem.terms, problem.max_iter, problem.tol);
}

double lf_constant_limit(double c) {
  if (!(c > 0.0)) throw InvalidParameters("constant must be positive");
  return 0.5 * (std::sqrt(c * c + 4.0) - c);
}

ConditionReport lf_lipschitz_check(const ConvexFn1& f, double t) {
  ConditionReport rep;
  rep.criterion = "lf-lipschitz";
  rep.param("t", t);
  const ConvexFn1 h = ConvexFn1::quadratic(1.0);
  const QuadBounds qb = quad_bounds(f);
  if (!pointwise_leq(h, f, 1e-12) || std::isinf(qb.big_r)) {
    rep.verdict = Verdict::kNotApplicable;
    rep.note = "needs h <= f <= R h with R finite";
    return rep;
  }
  const double c = c_profile_lf(std::max(1.0, qb.big_r));
  const double rhs = c * c * t;
  const double lhs = rho_h(legendre(f), legendre(add(f, multiply(t, h))));
  rep.param("R", qb.big_r);
  rep.witness(0, lhs, "rho_h(f*, (f+th)*)").witness(1, rhs, "C_R^2 t").witness(2, rhs - lhs, "slack");
  rep.verdict = lhs <= rhs * (1.0 + 1e-9) + 1e-12 ? Verdict::kHolds : Verdict::kFails;
  return rep;
}

}  // namespace cf
