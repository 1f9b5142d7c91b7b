// Acceptance run: one PASS/FAIL line per criterion.  Exit status is 0 when
// every criterion behaves as recorded (known failures must still fail).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cf/checks.hpp"
#include "cf/fn_cf.hpp"
#include "cf/random.hpp"
#include "cf/scalar.hpp"
#include "cf/set_cf.hpp"

using namespace cf;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
  const char* known_failure = nullptr;  // reason, when the criterion cannot be met
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

constexpr double kEps = std::numeric_limits<double>::epsilon();

Outcome scalar_golden() {
  const auto tr = approximant_trace(ScalarInstance{}, TermSequence<double>::constant(1.0), 60, 1e-15);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  const double e1 = std::abs(tr.z(60) - g);
  const double e2 = std::abs(upsilon(1.0, 1.0) - 0.5 * (1.0 + std::sqrt(5.0)));
  return {e1 <= 1e-9 && e2 <= 1e-12, fmt("|z_60 - g| = %.2e, |upsilon(1,1) - (1+sqrt5)/2| = %.2e", e1, e2)};
}

Outcome ball_fixed_point() {
  double worst = 0.0;
  double worst_res = 0.0;
  bool ok = true;
  for (const double e : {0.5, 1.0, 3.0}) {
    const auto tr = ball_trace(e, 100, 1e-14);
    const double want = 0.5 * (std::sqrt(e * e + 4.0) - e);
    const double z = *tr.limit_estimate;
    // rB polar is B/r, so rho_H(F*, F + K) = |1/z - (z + e)|
    const double res = fixed_point_residual(ScalarInstance{}, z, e);
    worst = std::max(worst, std::abs(z - want));
    worst_res = std::max(worst_res, res);
    ok = ok && tr.verdict == TraceVerdict::kConverged;
  }
  return {ok && worst <= 1e-9 && worst_res <= 1e-8, fmt("max radius error %.2e, max residual %.2e", worst, worst_res)};
}

Outcome polar_lipschitz() {
  Rng rng = make_rng(3003);
  long bad = 0;
  double min_slack = kInf;
  for (int i = 0; i < 500; ++i) {
    const ConvexBody2 k = random_polytope(rng, 5 + i % 8);
    const ConvexBody2 l = random_polytope(rng, 5 + (i / 8) % 8);
    const double lhs = hausdorff(polar(k), polar(l));
    const double f = std::max(norm(polar(k)), norm(polar(l)));
    const double rhs = f * f * hausdorff(k, l);
    min_slack = std::min(min_slack, rhs - lhs);
    if (lhs > rhs + 1e-9) ++bad;
  }
  return {bad == 0, fmt("500 pairs, %.0f violations, min slack %.3g", static_cast<double>(bad), min_slack)};
}

Outcome nec_suf() {
  bool ok = true;
  std::ostringstream d;
  for (const double a : {0.5, 1.0, 2.0}) {
    SetCFProblem p;
    p.terms = TermSequence<ConvexBody2>::constant(strip(a));
    p.max_iter = 100;
    const auto tr = set_cf_trace(p);
    const auto rep = check_nec_suf(strip(a), 20);
    ok = ok && tr.verdict == TraceVerdict::kConverged && rep.holds();
    d << "strip(" << a << "): " << to_string(tr.verdict) << "/k=" << rep.parameter("k") << "; ";
  }
  SetCFProblem p;
  const ConvexBody2 seg = segment({-1, 0}, {1, 0});
  p.terms = TermSequence<ConvexBody2>::constant(seg);
  p.max_iter = 100;
  const auto tr = set_cf_trace(p);
  const auto rep = check_nec_suf(seg, 20);
  ok = ok && tr.verdict == TraceVerdict::kDivergedOscillating && !rep.holds();
  d << "segment: " << to_string(tr.verdict) << "/" << to_string(rep.verdict);
  return {ok, d.str()};
}

Outcome seidel_stern() {
  SetCFProblem p;
  const std::vector<ConvexBody2> two{segment({-1, 0}, {1, 0}), segment({-1, -1}, {1, 1})};
  p.terms = TermSequence<ConvexBody2>::periodic(two);
  p.max_iter = 100;
  const auto tr = set_cf_trace(p);
  double sum = 0.0;
  for (std::size_t n = 1; n <= p.max_iter; ++n) sum += norm(p.terms.at(n));
  // a periodic sequence of nonzero terms: partial sums grow at least linearly
  const bool unbounded = sum >= static_cast<double>(p.max_iter) * std::min(norm(two[0]), norm(two[1]));
  return {unbounded && tr.verdict == TraceVerdict::kDivergedOscillating,
          "sum of norms over 100 terms " + fmt("%.1f", sum) + ", verdict " + to_string(tr.verdict)};
}

template <class S>
long monotone_violations(const S& s, const std::vector<typename S::value_type>& cycle, std::size_t n) {
  const auto tr = approximant_trace(s, TermSequence<typename S::value_type>::periodic(cycle), n, 1e-12);
  const auto rep = check_monotone(s, tr, 1e-9);
  return static_cast<long>(rep.certificates.size()) + (rep.holds() ? 0 : 1) - (rep.certificates.empty() ? 0 : 1);
}

Outcome monotonicity() {
  Rng rng = make_rng(6006);
  std::uniform_real_distribution<double> pos(0.05, 3.0);
  long bad[4] = {0, 0, 0, 0};
  for (int i = 0; i < 200; ++i) {
    const std::size_t per = 1 + i % 3;
    std::vector<double> xs;
    std::vector<ConvexBody2> ks;
    std::vector<ConvexFn1> fs;
    std::vector<ConvexFn1> gs;
    for (std::size_t j = 0; j < per; ++j) {
      xs.push_back(pos(rng));
      ks.push_back(random_polytope(rng, 6, 1.5));
      fs.push_back(random_plq(rng, 4.0, 3));
      gs.push_back(random_pl(rng, 0.0, true));
    }
    bad[0] += monotone_violations(ScalarInstance{}, xs, 12);
    bad[1] += monotone_violations(SetInstance{}, ks, 8);
    bad[2] += monotone_violations(LFInstance{}, fs, 10);
    bad[3] += monotone_violations(AInstance{}, gs, 10);
  }
  const long total = bad[0] + bad[1] + bad[2] + bad[3];
  return {total == 0, fmt("200 instances each; violations scalar %.0f set %.0f conj %.0f A %.0f", bad[0], bad[1],
                          bad[2], bad[3])};
}

Outcome lf_condition() {
  Rng rng = make_rng(7007);
  long bad = 0;
  long cases = 0;
  double worst_excess = -kInf;
  for (const double big_r : {1.5, 2.0, 10.0}) {
    for (int i = 0; i < 200; ++i) {
      const ConvexFn1 f = random_plq(rng, big_r, 2 + i % 4);
      // exact piecewise-quadratic terms: the only error is rounding, bounded by 1e-12 t
      const double c = c_profile_lf(big_r);
      for (const double t : {0.01, 0.1, 1.0}) {
        const double lhs = rho_h(legendre(f), legendre(add(f, ConvexFn1::quadratic(t))));
        const double rhs = c * c * t;
        worst_excess = std::max(worst_excess, lhs - rhs);
        ++cases;
        if (lhs > rhs + 1e-12 * t) ++bad;
      }
    }
  }
  return {bad == 0, fmt("%.0f cases, %.0f violations, max lhs - rhs %.3g (per-case bound 1e-12 t)",
                        static_cast<double>(cases), static_cast<double>(bad), worst_excess)};
}

Outcome lf_theorem() {
  FnCFProblem p;
  p.terms = TermSequence<ConvexFn1>::constant(ConvexFn1::quadratic(2.0));
  p.max_iter = 100;
  const auto tr = lf_trace(p);
  const double err = rho_h(*tr.limit_estimate, ConvexFn1::quadratic(std::sqrt(2.0) - 1.0));
  const bool v1 = check_legendre_theorem(2.0, 2.0).holds();
  const bool v2 = check_legendre_theorem(1.0, 1.0).holds();
  const bool v3 = !check_legendre_theorem(0.5, 10.0).holds();
  const bool v4 = check_legendre_theorem(ConvexFn1::quadratic(2.0)).holds();
  return {tr.verdict == TraceVerdict::kConverged && err <= 1e-6 && v1 && v2 && v3 && v4,
          fmt("rho_h(z, (sqrt2-1)h) = %.2e; verdicts (2,2) (1,1) (0.5,10): ", err) + (v1 ? "holds " : "fails ") +
              (v2 ? "holds " : "fails ") + (v3 ? "fails" : "holds")};
}

Outcome a_transform_checks() {
  Rng rng = make_rng(9009);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const ConvexFn1 f = random_pl(rng);
    const ConvexFn1 back = a_transform(a_transform(f));
    worst = std::max(worst, max_abs_diff(back, f) / (1.0 + std::abs(f(1.0)) + std::abs(f(-1.0))));
  }
  const ConvexFn1 a = ConvexFn1::abs();
  const bool abs_fixed = a_transform(a) == a;
  bool hp_ok = true;
  std::string hp;
  for (const double p : {1.5, 3.0}) {
    const auto s = hp_construct(p);
    const double err = window_rel_diff(a_transform(s.fn), s.fn, s.window_lo, s.extent);
    hp_ok = hp_ok && err <= 10.0 * s.rel_bound;
    hp += fmt(" p=%.1f %.2e/%.2e", p, err, s.rel_bound);
  }
  // involution is exact up to rounding of the affine pieces
  return {worst <= 1e-12 && abs_fixed && hp_ok,
          fmt("involution max rel. error %.2e, |x| fixed bitwise: ", worst) + (abs_fixed ? "yes" : "no") +
              "; h_p residual/bound" + hp};
}

template <class S>
long a_posteriori_violations(const S& s, const typename S::value_type& x, double abs_floor, double& worst_ratio) {
  const std::size_t big_n = 100;
  const double r = s.lower_ratio(x);
  const auto urr = check_urr(r, s.upper_ratio(x), s.profile());
  if (!urr.holds()) return 1;
  const double q = urr.certificates.back().value;
  const auto tr = approximant_trace(s, TermSequence<typename S::value_type>::constant(x), big_n, 1e-300);
  const auto& zn = tr.z(big_n);
  // distances below this are rounding noise of the representation
  const double floor = abs_floor * std::max(1.0, s.rho(zn, s.neutral()));
  long bad = 0;
  for (std::size_t n = 3; n < big_n; ++n) {
    const double d = s.rho(tr.z(n), zn);
    const double bound = a_posteriori_error(q, 1, r, n);
    worst_ratio = std::max(worst_ratio, d / (bound + floor));
    if (d > bound + floor) ++bad;
  }
  return bad;
}

Outcome a_posteriori() {
  long bad = 0;
  double worst = 0.0;
  for (const double r : {0.5, 1.0, 3.0}) bad += a_posteriori_violations(ScalarInstance{}, r, 64.0 * kEps, worst);
  // polygon approximants settle to within ~5e-13 of each other, not to zero
  for (const double r : {0.5, 1.0, 3.0}) {
    bad += a_posteriori_violations(SetInstance{}, ball_ngon(r, 16), 1e-12, worst);
  }
  return {bad == 0, fmt("k = 1, q from check_urr, N = 100; %.0f violations, max rho/(bound + floor) %.3f",
                        static_cast<double>(bad), worst)};
}

Outcome three_segments() {
  const Vec2 d1 = direction(0.0);
  const Vec2 d2 = direction(2.0 * std::numbers::pi / 3.0);
  const Vec2 d3 = direction(4.0 * std::numbers::pi / 3.0);
  const auto search = three_segment_min_length(d1, d2, d3, 0.01, 1000.0);
  if (!search.minimal_length) {
    return {false, fmt("no threshold in [0.01, 1000]: margin peaks at %.4f (L = %.4f), must exceed 1",
                       search.best_inradius, search.best_length)};
  }
  const double len = 2.0 * *search.minimal_length;
  SetCFProblem p;
  p.terms = TermSequence<ConvexBody2>::periodic(
      {segment(-len * d1, len * d1), segment(-len * d2, len * d2), segment(-len * d3, len * d3)});
  p.max_iter = 100;
  p.tol = 1e-8;
  const auto tr = set_cf_trace(p);
  return {tr.verdict == TraceVerdict::kConverged, fmt("L* = %.4f, trace at 2L*: ", *search.minimal_length) +
                                                      to_string(tr.verdict)};
}

}  // namespace

int main() {
  const std::vector<Criterion> all{
      {1, "scalar golden values", scalar_golden},
      {2, "ball fixed point", ball_fixed_point},
      {3, "set polar Lipschitz theorem", polar_lipschitz},
      {4, "necessary-and-sufficient theorem", nec_suf},
      {5, "Seidel-Stern counterexample", seidel_stern},
      {6, "monotone approximants", monotonicity},
      {7, "conjugate Lipschitz condition", lf_condition},
      {8, "quadratic constant term and r^2 + 4r/R > 4", lf_theorem},
      {9, "A-transform involution and self-polar h_p", a_transform_checks},
      {10, "a-posteriori bound", a_posteriori},
      {11, "three segments at 120 degrees", three_segments,
       "at 120 degree spacing the margin is (sqrt3/2) L / (1 + L^2/2) <= sqrt(3/8) < 1 for every L"},
  };
  int unexpected = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool slow = secs >= 10.0;
    const bool pass = o.pass && !slow;
    std::printf("%s %2d %s: %s (%.2f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs,
                slow ? " [over 10 s]" : "");
    if (c.known_failure) {
      if (pass) {
        std::printf("     ^ recorded as unattainable but passed; the record is stale\n");
        ++unexpected;
      } else {
        std::printf("     ^ known failure: %s\n", c.known_failure);
      }
    } else if (!pass) {
      ++unexpected;
    }
  }
  std::printf("%d unexpected result(s)\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
