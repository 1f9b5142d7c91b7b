#include "cf/scalar.hpp"

#include <cmath>
#include <string>

namespace cf {

double ScalarInstance::scale(double a, double x) const {
  if (!(a > 0.0)) throw InvalidParameters("scale factor must be positive");
  return a * x;
}

double ScalarInstance::rho(double x, double y) const { return ext_abs_diff(x, y); }

void ScalarInstance::validate(double x) const {
  if (std::isnan(x) || x < 0.0) throw InvalidInput("scalar term must lie in [0, inf]");
}

double upsilon(double r, double big_r) {
  if (!(r > 0.0) || !(big_r > 0.0)) throw InvalidParameters("upsilon needs r, R > 0");
  if (std::isinf(r)) return kInf;
  if (std::isinf(big_r)) return r;
  return 0.5 * (std::sqrt(r * r + 4.0 * r / big_r) + r);
}

double periodic_limit(double r, double big_r) {
  return ext_recip(upsilon(r, big_r));
}

double scalar_cf(std::span<const double> terms, std::size_t n) {
  if (n == 0 || n > terms.size()) throw InvalidParameters("scalar_cf index out of range");
  double z = ext_recip(terms[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    if (terms[i] < 0.0) throw InvalidInput("scalar_cf terms must be nonnegative");
    z = ext_recip(terms[i] + z);
  }
  return z;
}

double scalar_cf(std::span<const double> terms) { return scalar_cf(terms, terms.size()); }

ConditionReport seidel_stern_verdict(const TermSequence<double>& terms, std::size_t horizon) {
  if (horizon < 4) throw InvalidParameters("Seidel-Stern horizon must be at least 4");
  std::vector<double> b;
  b.reserve(horizon);
  for (std::size_t i = 1; i <= horizon; ++i) {
    const double v = terms.at(i);
    if (std::isnan(v) || v < 0.0) throw InvalidInput("Seidel-Stern terms must be nonnegative");
    b.push_back(v);
  }
  double total = 0.0;
  double half = 0.0;
  for (std::size_t i = 0; i < horizon; ++i) {
    total += b[i];
    if (i + 1 == horizon / 2) half = total;
  }
  const double tail = total - half;
  const double gap = ext_abs_diff(scalar_cf(b, horizon), scalar_cf(b, horizon - 1));

  ConditionReport rep;
  rep.criterion = "seidel-stern";
  rep.param("N", static_cast<double>(horizon));
  rep.witness(static_cast<long>(horizon), total, "partial sum");
  rep.witness(static_cast<long>(horizon), tail, "tail sum over second half");
  rep.witness(static_cast<long>(horizon), gap, "even/odd gap");

  if (terms.is_periodic()) {
    // A periodic nonnegative sequence has infinite sum iff one term is positive.
    bool positive = false;
    for (std::size_t i = 1; i <= terms.period(); ++i) positive = positive || terms.at(i) > 0.0;
    rep.verdict = positive ? Verdict::kHolds : Verdict::kFails;
    return rep;
  }
  if (tail >= 0.5) {
    rep.verdict = Verdict::kHorizonLimited;
    rep.note = "partial sums keep growing; convergent over the horizon";
  } else if (gap > 1e-9) {
    rep.verdict = Verdict::kFails;
    rep.note = "partial sums stall and even/odd approximants stay apart";
  } else {
    rep.verdict = Verdict::kHorizonLimited;
    rep.note = "partial sums stall but even/odd gap is below 1e-9";
  }
  return rep;
}

}  // namespace cf
