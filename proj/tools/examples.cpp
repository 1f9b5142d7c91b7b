#include <cmath>
#include <numbers>
#include <ostream>

#include "cf/fn_cf.hpp"
#include "cf/io.hpp"
#include "cf/random.hpp"
#include "cf/scalar.hpp"
#include "cf/set_cf.hpp"
#include "cli.hpp"

namespace cf::cli {

namespace {

double param(const Params& p, const char* key, double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

template <class V>
void print_trace_tail(const ApproximantTrace<V>& tr, std::ostream& out) {
  out << "verdict " << to_string(tr.verdict) << " after " << tr.entries.size() << " approximants\n";
  const auto& e = tr.entries.back();
  out << "last gap " << io::format_double(e.gap) << " norm " << io::format_double(e.norm) << "\n";
}

bool ex_ball(const Params& p, std::ostream& out) {
  const double r = param(p, "r", 1.0);
  const auto tr = ball_trace(r, 100, 1e-12);
  const double want = 0.5 * (std::sqrt(r * r + 4.0) - r);
  const double got = *tr.limit_estimate;
  out << "limit radius " << io::format_double(got) << " expected " << io::format_double(want) << "\n";
  print_trace_tail(tr, out);
  return tr.verdict == TraceVerdict::kConverged && std::abs(got - want) <= 1e-9;
}

bool ex_segment(const Params& p, std::ostream& out) {
  const double len = param(p, "length", 1.0);
  SetCFProblem prob;
  prob.terms = TermSequence<ConvexBody2>::constant(segment({-len, 0}, {len, 0}));
  prob.max_iter = 60;
  const auto tr = set_cf_trace(prob);
  print_trace_tail(tr, out);
  const auto rep = check_nec_suf(segment({-len, 0}, {len, 0}), 20);
  out << "nec-suf " << to_string(rep.verdict) << "\n";
  return tr.verdict == TraceVerdict::kDivergedOscillating && !rep.holds();
}

bool ex_strip(const Params& p, std::ostream& out) {
  const double a = param(p, "a", 1.0);
  SetCFProblem prob;
  prob.terms = TermSequence<ConvexBody2>::constant(strip(a));
  prob.max_iter = 60;
  const auto tr = set_cf_trace(prob);
  print_trace_tail(tr, out);
  const auto rep = check_nec_suf(strip(a), 20);
  out << "nec-suf " << to_string(rep.verdict) << " k=" << rep.parameter("k") << "\n";
  out << "limit " << io::body_to_json(*tr.limit_estimate).dump() << "\n";
  return tr.verdict == TraceVerdict::kConverged && rep.holds();
}

bool ex_seidel(const Params&, std::ostream& out) {
  SetCFProblem prob;
  const std::vector<ConvexBody2> two{segment({-1, 0}, {1, 0}), segment({-1, -1}, {1, 1})};
  prob.terms = TermSequence<ConvexBody2>::periodic(two);
  prob.max_iter = 60;
  const auto tr = set_cf_trace(prob);
  double sum = 0.0;
  for (std::size_t n = 1; n <= prob.max_iter; ++n) sum += norm(prob.terms.at(n));
  out << "sum of term norms over " << prob.max_iter << " terms " << io::format_double(sum) << " (grows linearly)\n";
  print_trace_tail(tr, out);
  return tr.verdict == TraceVerdict::kDivergedOscillating;
}

bool ex_three_segments(const Params& p, std::ostream& out) {
  const double hi = param(p, "max-length", 100.0);
  const Vec2 d1 = direction(0.0);
  const Vec2 d2 = direction(2.0 * std::numbers::pi / 3.0);
  const Vec2 d3 = direction(4.0 * std::numbers::pi / 3.0);
  const auto search = three_segment_min_length(d1, d2, d3, 0.01, hi);
  out << "best margin " << io::format_double(search.best_inradius) << " at L=" << io::format_double(search.best_length)
      << "\n";
  if (search.minimal_length) {
    out << "threshold L*=" << io::format_double(*search.minimal_length) << "\n";
  } else {
    out << "no length in [0.01, " << hi << "] makes the condition hold (margin stays below 1)\n";
  }
  // the 3-periodic fraction itself at the best length
  SetCFProblem prob;
  const double len = search.best_length;
  prob.terms = TermSequence<ConvexBody2>::periodic(
      {segment(-len * d1, len * d1), segment(-len * d2, len * d2), segment(-len * d3, len * d3)});
  prob.max_iter = 60;
  const auto tr = set_cf_trace(prob);
  print_trace_tail(tr, out);
  // documented outcome: at equal 120 degree spacing the margin peaks near 0.612
  return !search.minimal_length && search.best_inradius < 1.0;
}

bool ex_quadratic(const Params& p, std::ostream& out) {
  const double c = param(p, "c", 2.0);
  FnCFProblem prob;
  prob.terms = TermSequence<ConvexFn1>::constant(ConvexFn1::quadratic(c));
  prob.max_iter = 100;
  const auto tr = lf_trace(prob);
  const double g = lf_constant_limit(c);
  const double err = rho_h(*tr.limit_estimate, ConvexFn1::quadratic(g));
  const auto rep = check_legendre_theorem(ConvexFn1::quadratic(c));
  print_trace_tail(tr, out);
  out << "limit gamma h with gamma " << io::format_double(g) << ", rho_h error " << io::format_double(err) << "\n";
  out << "legendre theorem " << to_string(rep.verdict) << "\n";
  return tr.verdict == TraceVerdict::kConverged && err <= 1e-6 && rep.holds() == (c * c + 4.0 > 4.0);
}

bool ex_hp(const Params& p, std::ostream& out) {
  const double pp = param(p, "p", 1.0);
  const auto s = hp_construct(pp);
  if (pp == 1.0) {
    const double res = rho_wrt(a_transform(s.fn), s.fn, s.fn);
    out << "p=1: |x| exactly, residual " << io::format_double(res) << "\n";
    return res <= 1e-15;
  }
  const double err = window_rel_diff(a_transform(s.fn), s.fn, s.window_lo, s.extent);
  out << "p=" << pp << ": relative residual " << io::format_double(err) << " on " << io::format_double(s.window_lo)
      << " <= |x| <= " << s.extent << ", sampling bound " << io::format_double(s.rel_bound) << "\n";
  return err <= 10.0 * s.rel_bound;
}

}  // namespace

const std::vector<Example>& example_registry() {
  static const std::vector<Example> reg{
      {"ball", "constant term rB (r=1): limit radius (sqrt(r^2+4)-r)/2", ex_ball},
      {"segment", "constant segment (length=1): oscillates, nec-suf fails", ex_segment},
      {"strip", "constant strip (a=1): converges, nec-suf holds", ex_strip},
      {"seidel-counterexample", "two alternating centred segments: diverges despite unbounded norm sum", ex_seidel},
      {"three-segments", "three segments at 120 degrees: length search for the sufficient condition", ex_three_segments},
      {"quadratic-function", "constant term c h (c=2) under conjugation: limit gamma h", ex_quadratic},
      {"hp-selfpolar", "h_p (p=1) is an A-transform fixed point", ex_hp},
  };
  return reg;
}

long fuzz(const std::string& kind, long count, std::ostream& log) {
  Rng rng = make_rng(20240601);
  long bad = 0;
  auto want = [&](const char* k) { return kind == "all" || kind == k; };
  if (want("set-polar")) {
    long v = 0;
    for (long i = 0; i < count; ++i) {
      const auto rep = polar_lipschitz_check(random_polytope(rng), random_polytope(rng));
      if (!rep.holds()) ++v;
    }
    log << "set-polar " << count << " cases, " << v << " violations\n";
    bad += v;
  }
  if (want("lf")) {
    long v = 0;
    for (long i = 0; i < count; ++i) {
      const double big_r = i % 3 == 0 ? 1.5 : (i % 3 == 1 ? 2.0 : 10.0);
      const ConvexFn1 f = random_plq(rng, big_r);
      for (const double t : {0.01, 0.1, 1.0}) {
        if (!lf_lipschitz_check(f, t).holds()) ++v;
      }
    }
    log << "lf " << count << " cases, " << v << " violations\n";
    bad += v;
  }
  if (want("a-xh")) {
    long v = 0;
    const ConvexFn1 h = ConvexFn1::abs();
    for (long i = 0; i < count; ++i) {
      const ConvexFn1 f = random_pl(rng, 1.0);
      for (const double t : {0.01, 1.0}) {
        if (!check_a_xh(f, h, t).holds()) ++v;
      }
    }
    log << "a-xh " << count << " cases, " << v << " violations\n";
    bad += v;
  }
  if (want("monotone")) {
    long v = 0;
    for (long i = 0; i < count; ++i) {
      const std::vector<ConvexBody2> ks{random_polytope(rng), random_polytope(rng)};
      const auto tr = approximant_trace(SetInstance{}, TermSequence<ConvexBody2>::periodic(ks), 8, 1e-10);
      if (!check_monotone(SetInstance{}, tr, 1e-9).holds()) ++v;
    }
    log << "monotone " << count << " cases, " << v << " violations\n";
    bad += v;
  }
  return bad;
}

}  // namespace cf::cli
