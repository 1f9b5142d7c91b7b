#include "cf/checks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cf/common.hpp"
#include "cf/scalar.hpp"

namespace cf {

SandwichBounds sandwich_bounds(std::span<const double> r, std::span<const double> big_r,
                               std::size_t n) {
  if (n == 0 || r.size() < n || big_r.size() < n) {
    throw InvalidParameters("sandwich bounds need n terms of both sequences");
  }
  std::vector<double> lower(n);
  std::vector<double> upper(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(r[i] >= 0.0) || r[i] > big_r[i]) throw InvalidParameters("sandwich bounds need r_i <= R_i");
    const bool odd = i % 2 == 0;  // 1-based index i + 1
    lower[i] = odd ? big_r[i] : r[i];
    upper[i] = odd ? r[i] : big_r[i];
  }
  return {scalar_cf(lower), scalar_cf(upper)};
}

ConditionReport check_uniform_simple(double r, double big_r, const LipschitzProfile& profile) {
  if (!profile.exact_xh()) {
    throw InvalidParameters("uniform-simple criterion needs an exact profile; use check_urr");
  }
  if (!(r > 0.0) || big_r < r) throw InvalidParameters("uniform-simple needs 0 < r <= R");
  constexpr double eps = 1e-12;
  ConditionReport rep;
  rep.criterion = "uniform-simple";
  rep.param("r", r).param("R", big_r);
  if (r > 1.0 + eps) {
    rep.verdict = Verdict::kHolds;
    rep.note = "case (i): r > 1";
  } else if (std::abs(r - 1.0) <= eps) {
    rep.verdict = std::isinf(big_r) ? Verdict::kFails : Verdict::kHolds;
    rep.note = "case (ii): r = 1";
  } else {
    const double limit = r / (1.0 - r);
    rep.witness(0, limit, "r/(1-r)");
    rep.verdict = big_r <= limit * (1.0 + eps) ? Verdict::kHolds : Verdict::kFails;
    rep.note = "case (iii): r < 1";
  }
  return rep;
}

ConditionReport check_urr(double r, double big_r, const LipschitzProfile& profile) {
  if (!(r > 0.0) || big_r < r) throw InvalidParameters("check_urr needs 0 < r <= R");
  const double lo = upsilon(r, big_r);
  const double hi = upsilon(big_r, r);
  const double quotient = profile(hi / lo) / lo;
  ConditionReport rep;
  rep.criterion = "urr";
  rep.param("r", r).param("R", big_r);
  rep.witness(0, lo, "upsilon(r,R)");
  rep.witness(0, hi, "upsilon(R,r)");
  rep.witness(0, quotient, "q");
  rep.verdict = quotient < 1.0 ? Verdict::kHolds : Verdict::kFails;
  return rep;
}

ConditionReport check_variable_terms(const std::function<double(std::size_t)>& r,
                                     const std::function<double(std::size_t)>& big_r,
                                     const LipschitzProfile& profile, std::size_t horizon) {
  if (horizon < 4) throw InvalidParameters("variable-terms horizon must be at least 4");
  constexpr double margin = 1e-6;
  ConditionReport rep;
  rep.criterion = "variable-terms";
  rep.param("N", static_cast<double>(horizon));
  double trailing_inf = kInf;
  double trailing_sup = -kInf;
  for (std::size_t n = 1; n <= horizon; ++n) {
    const double rn = r(n);
    const double rn1 = r(n + 1);
    const double big = big_r(n);
    if (!(rn > 0.0) || !(rn1 > 0.0) || big < rn) {
      throw InvalidParameters("variable-terms needs 0 < r_n <= R_n");
    }
    const double c = profile((big + 1.0 / rn1) / rn);
    const double value = static_cast<double>(n) * std::log(rn * rn1 / (c * c));
    if (2 * n >= horizon) {
      trailing_inf = std::min(trailing_inf, value);
      trailing_sup = std::max(trailing_sup, value);
    }
    if (n == horizon || (n & (n - 1)) == 0) rep.witness(static_cast<long>(n), value);
  }
  rep.witness(static_cast<long>(horizon), trailing_inf, "trailing inf");
  if (trailing_inf > 1.0 + margin) {
    rep.verdict = Verdict::kHolds;
  } else if (trailing_sup <= 1.0) {
    rep.verdict = Verdict::kFails;
  } else {
    rep.verdict = Verdict::kHorizonLimited;
  }
  return rep;
}

double a_posteriori_error(double q, std::size_t k, double r, std::size_t n) {
  if (!(q > 0.0) || q >= 1.0) throw InvalidParameters("a-posteriori bound needs 0 < q < 1");
  if (!(r > 0.0)) throw InvalidParameters("a-posteriori bound needs r > 0");
  if (n <= 2 * k) throw InvalidParameters("a-posteriori bound needs n > 2k");
  const double e = 2.0 * static_cast<double>(n - 2 * k);
  return std::pow(q, e) / ((1.0 - q * q) * r);
}

}  // namespace cf
