#pragma once

// Continued fractions over a partially ordered abelian semigroup with an
// order-reversing involution x -> x*.  An instance type supplies the algebra
// (add, involute, scale, order, metric); everything here is generic.
//
//   [x_1]          = x_1*
//   [x_1,...,x_n]  = (x_1 + [x_2,...,x_n])*

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cf/common.hpp"
#include "cf/profile.hpp"
#include "cf/report.hpp"

namespace cf {

template <class S>
concept OrderedSemigroup = requires(const S& s, const typename S::value_type& x, double a) {
  typename S::value_type;
  { s.add(x, x) } -> std::convertible_to<typename S::value_type>;
  { s.involute(x) } -> std::convertible_to<typename S::value_type>;
  { s.scale(a, x) } -> std::convertible_to<typename S::value_type>;
  { s.leq(x, x, a) } -> std::convertible_to<bool>;
  { s.neutral() } -> std::convertible_to<typename S::value_type>;
  { s.top() } -> std::convertible_to<typename S::value_type>;
  { s.self_polar() } -> std::convertible_to<typename S::value_type>;
  // inf{t >= 0 : x <= y + t h, y <= x + t h}
  { s.rho(x, x) } -> std::convertible_to<double>;
  // sup{a : a h <= x} and inf{b : x <= b h}
  { s.lower_ratio(x) } -> std::convertible_to<double>;
  { s.upper_ratio(x) } -> std::convertible_to<double>;
  { s.profile() } -> std::convertible_to<const LipschitzProfile&>;
  { s.validate(x) };
};

/// Terms x_1, x_2, ... of a continued fraction (1-based).
template <class V>
class TermSequence {
 public:
  enum class Mode { kFinite, kPeriodic, kRule };

  static TermSequence finite(std::vector<V> terms) {
    return TermSequence(Mode::kFinite, std::move(terms), {}, 0);
  }
  static TermSequence periodic(std::vector<V> cycle) {
    if (cycle.empty()) throw InvalidInput("periodic term sequence needs a nonempty cycle");
    return TermSequence(Mode::kPeriodic, std::move(cycle), {}, 0);
  }
  static TermSequence constant(V term) { return periodic(std::vector<V>{std::move(term)}); }
  static TermSequence rule(std::function<V(std::size_t)> generator) {
    return TermSequence(Mode::kRule, {}, std::move(generator), 0);
  }

  Mode mode() const { return mode_; }
  bool is_periodic() const { return mode_ == Mode::kPeriodic; }
  std::size_t period() const { return stored_.size(); }

  /// Number of available terms; nullopt for infinite sequences.
  std::optional<std::size_t> size() const {
    if (mode_ != Mode::kFinite) return std::nullopt;
    return stored_.size() - offset_;
  }
  bool has(std::size_t n) const {
    auto total = size();
    return n >= 1 && (!total || n <= *total);
  }

  V at(std::size_t n) const {
    if (!has(n)) throw InvalidInput("term index " + std::to_string(n) + " out of range");
    const std::size_t i = offset_ + n - 1;
    switch (mode_) {
      case Mode::kFinite:
        return stored_[i];
      case Mode::kPeriodic:
        return stored_[i % stored_.size()];
      case Mode::kRule:
        return generator_(i + 1);
    }
    return stored_.front();
  }

  /// The tail x_{shift+1}, x_{shift+2}, ...
  TermSequence shifted(std::size_t shift) const {
    TermSequence out = *this;
    if (mode_ == Mode::kPeriodic) {
      out.offset_ = (offset_ + shift) % stored_.size();
    } else {
      out.offset_ = offset_ + shift;
    }
    return out;
  }

 private:
  TermSequence(Mode mode, std::vector<V> stored, std::function<V(std::size_t)> gen,
               std::size_t offset)
      : mode_(mode), stored_(std::move(stored)), generator_(std::move(gen)), offset_(offset) {}

  Mode mode_;
  std::vector<V> stored_;
  std::function<V(std::size_t)> generator_;
  std::size_t offset_;
};

enum class TraceVerdict { kConverged, kDivergedOscillating, kUndetermined };

inline const char* to_string(TraceVerdict v) {
  switch (v) {
    case TraceVerdict::kConverged:
      return "converged";
    case TraceVerdict::kDivergedOscillating:
      return "diverged-oscillating";
    case TraceVerdict::kUndetermined:
      return "undetermined";
  }
  return "unknown";
}

/// Trailing window of gaps used to declare convergence.
inline constexpr std::size_t kConvergenceWindow = 8;

template <class V>
struct TraceEntry {
  std::size_t n = 0;
  V z;
  double gap = 0.0;  // rho(z_n, z_{n+1}); NaN when z_{n+1} is unavailable
  double norm = 0.0;
};

template <class V>
struct ApproximantTrace {
  std::vector<TraceEntry<V>> entries;
  TraceVerdict verdict = TraceVerdict::kUndetermined;
  std::optional<V> limit_estimate;
  double tol = 0.0;
  std::vector<std::string> events;

  const V& z(std::size_t n) const { return entries.at(n - 1).z; }
};

template <OrderedSemigroup S>
void validate_term(const S& s, const typename S::value_type& x) {
  s.validate(x);
  if (!s.leq(s.neutral(), x, 1e-12)) throw InvalidInput("term is not above the neutral element");
}

/// z_n = [x_1, ..., x_n] by backward recursion.
template <OrderedSemigroup S>
typename S::value_type approximant(const S& s, const TermSequence<typename S::value_type>& terms,
                                   std::size_t n) {
  if (n == 0) throw InvalidParameters("approximant index must be positive");
  if (!terms.has(n)) throw InvalidParameters("not enough terms for the requested approximant");
  auto z = s.involute(terms.at(n));
  for (std::size_t i = n - 1; i >= 1; --i) {
    z = s.involute(s.add(terms.at(i), z));
  }
  return z;
}

/// z_1, ..., z_count.  Periodic sequences share tails across phases, so the
/// cost is O(count * period) involutions instead of O(count^2).
template <OrderedSemigroup S>
std::vector<typename S::value_type> approximants(const S& s,
                                                 const TermSequence<typename S::value_type>& terms,
                                                 std::size_t count) {
  using V = typename S::value_type;
  std::vector<V> out;
  out.reserve(count);
  if (terms.is_periodic()) {
    const std::size_t p = terms.period();
    std::vector<V> cycle;
    for (std::size_t i = 1; i <= p; ++i) cycle.push_back(terms.at(i));
    // layer[ph] = [x_{ph+1}, ..., x_{ph+len}]
    std::vector<V> layer;
    for (std::size_t ph = 0; ph < p; ++ph) layer.push_back(s.involute(cycle[ph]));
    out.push_back(layer[0]);
    for (std::size_t len = 2; len <= count; ++len) {
      std::vector<V> next;
      next.reserve(p);
      for (std::size_t ph = 0; ph < p; ++ph) {
        next.push_back(s.involute(s.add(cycle[ph], layer[(ph + 1) % p])));
      }
      layer = std::move(next);
      out.push_back(layer[0]);
    }
    return out;
  }
  for (std::size_t n = 1; n <= count; ++n) out.push_back(approximant(s, terms, n));
  return out;
}

/// Approximant trace with gaps, norms and the convergence verdict:
/// converged when the last kConvergenceWindow gaps are below tol;
/// diverged-oscillating when even and odd subsequences each settle but stay
/// more than 10 tol apart; undetermined otherwise.
template <OrderedSemigroup S>
ApproximantTrace<typename S::value_type> approximant_trace(
    const S& s, const TermSequence<typename S::value_type>& terms, std::size_t max_n, double tol) {
  using V = typename S::value_type;
  if (max_n < 2) throw InvalidParameters("trace needs at least two approximants");
  if (!(tol > 0.0)) throw InvalidParameters("trace tolerance must be positive");
  const auto available = terms.size();
  if (available && *available < max_n) {
    throw InvalidParameters("not enough terms for the requested trace length");
  }
  for (std::size_t i = 1; i <= (terms.is_periodic() ? terms.period() : max_n); ++i) {
    validate_term(s, terms.at(i));
  }
  const std::size_t count = (!available || *available > max_n) ? max_n + 1 : max_n;
  const std::vector<V> zs = approximants(s, terms, count);

  ApproximantTrace<V> trace;
  trace.tol = tol;
  std::size_t infinite_gaps = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    TraceEntry<V> e;
    e.n = n;
    e.z = zs[n - 1];
    e.gap = n < zs.size() ? s.rho(zs[n - 1], zs[n]) : std::numeric_limits<double>::quiet_NaN();
    e.norm = s.rho(zs[n - 1], s.neutral());
    if (std::isinf(e.gap)) ++infinite_gaps;
    trace.entries.push_back(std::move(e));
  }
  if (infinite_gaps > 0) {
    trace.events.push_back("infinite gap at " + std::to_string(infinite_gaps) + " of " +
                           std::to_string(max_n) + " steps");
  }

  auto gap_at = [&](std::size_t n) { return trace.entries[n - 1].gap; };
  std::size_t last_gap = max_n;
  if (std::isnan(gap_at(last_gap))) --last_gap;

  const std::size_t w = kConvergenceWindow;
  bool converged = last_gap >= w;
  for (std::size_t i = 0; converged && i < w; ++i) converged = gap_at(last_gap - i) < tol;
  if (converged) {
    trace.verdict = TraceVerdict::kConverged;
    trace.limit_estimate = zs[last_gap];
    return trace;
  }

  if (max_n >= 2 * w + 2) {
    bool settled = true;
    for (std::size_t i = 0; settled && i < 2 * w; ++i) {
      const std::size_t n = max_n - 2 - i;
      settled = s.rho(zs[n - 1], zs[n + 1]) < tol;
    }
    const double split = s.rho(zs[max_n - 1], zs[max_n - 2]);
    if (settled && split > 10.0 * tol) {
      trace.verdict = TraceVerdict::kDivergedOscillating;
      trace.events.push_back("even/odd limits separated by " + std::to_string(split));
      return trace;
    }
  }
  if (infinite_gaps == max_n) trace.events.push_back("rho infinite at every step");
  trace.verdict = TraceVerdict::kUndetermined;
  return trace;
}

/// x (+) y = (x* + y*)*.
template <OrderedSemigroup S>
typename S::value_type dual_add(const S& s, const typename S::value_type& x,
                                const typename S::value_type& y) {
  return s.involute(s.add(s.involute(x), s.involute(y)));
}

/// Even approximants nondecreasing, odd approximants nonincreasing.  A failure
/// indicates an implementation defect rather than a property of the terms.
template <OrderedSemigroup S>
ConditionReport check_monotone(const S& s, const ApproximantTrace<typename S::value_type>& trace,
                               double tol) {
  ConditionReport rep;
  rep.criterion = "monotone";
  rep.param("N", static_cast<double>(trace.entries.size())).param("tol", tol);
  if (trace.entries.size() < 4) {
    rep.verdict = Verdict::kNotApplicable;
    rep.note = "trace shorter than 4";
    return rep;
  }
  rep.verdict = Verdict::kHolds;
  const std::size_t count = trace.entries.size();
  for (std::size_t n = 1; n + 2 <= count; ++n) {
    const auto& lo = n % 2 == 0 ? trace.z(n) : trace.z(n + 2);
    const auto& hi = n % 2 == 0 ? trace.z(n + 2) : trace.z(n);
    if (!s.leq(lo, hi, tol)) {
      rep.verdict = Verdict::kFails;
      rep.witness(static_cast<long>(n), s.rho(lo, hi), n % 2 == 0 ? "even step" : "odd step");
    }
  }
  return rep;
}

/// Window condition with parameters (k, a, b):
///   x_n + [x_{n+1}, ..., x_{n+2k}]   >= a h
///   x_n + [x_{n+1}, ..., x_{n+2k-1}] <= b h
/// together with a > C(b/a).  Periodic terms are checked over one period
/// and yield `holds`; other sequences are checked for n <= horizon and yield
/// at best `horizon-limited`.
template <OrderedSemigroup S>
ConditionReport check_subk(const S& s, const TermSequence<typename S::value_type>& terms,
                           std::size_t k, double a, double b, std::size_t horizon = 64) {
  if (k < 1) throw InvalidParameters("window k must be at least 1");
  if (!(a > 0.0) || a > b) throw InvalidParameters("window bounds need 0 < a <= b");
  ConditionReport rep;
  rep.criterion = "subk";
  rep.param("k", static_cast<double>(k)).param("a", a).param("b", b);

  const double c = s.profile()(b / a);
  rep.witness(0, c, "C(b/a)");
  bool ok = a > c;
  if (!ok) rep.note = "a <= C(b/a)";

  std::size_t last = terms.is_periodic() ? terms.period() : horizon;
  if (auto total = terms.size()) {
    if (*total < 2 * k + 1) throw InvalidParameters("not enough terms for one window");
    last = std::min(last, *total - 2 * k);
  }
  rep.param("N", static_cast<double>(last));
  const double slack = 1e-12 * std::max(1.0, b);
  for (std::size_t n = 1; n <= last; ++n) {
    const auto tail = terms.shifted(n);
    const auto lower_window = s.add(terms.at(n), approximant(s, tail, 2 * k));
    const auto upper_window = s.add(terms.at(n), approximant(s, tail, 2 * k - 1));
    const double lo = s.lower_ratio(lower_window);
    const double hi = s.upper_ratio(upper_window);
    if (lo < a - 1e-12 * std::max(1.0, a)) {
      ok = false;
      rep.witness(static_cast<long>(n), lo, "lower window");
    }
    if (hi > b + slack) {
      ok = false;
      rep.witness(static_cast<long>(n), hi, "upper window");
    }
  }
  if (!ok) {
    rep.verdict = Verdict::kFails;
  } else {
    rep.verdict = terms.is_periodic() ? Verdict::kHolds : Verdict::kHorizonLimited;
  }
  return rep;
}

/// rho(z*, z + x); zero exactly when z solves the constant-term fixed point
/// equation z* = z + x.
template <OrderedSemigroup S>
double fixed_point_residual(const S& s, const typename S::value_type& z,
                            const typename S::value_type& x) {
  return s.rho(s.involute(z), s.add(z, x));
}

/// rho(x1, x2) / (r^2 - 1): bound on the distance between the limits of the
/// constant-term fractions with terms x1, x2 >= r h, r > 1.
template <OrderedSemigroup S>
double limit_distance_bound(const S& s, const typename S::value_type& x1,
                            const typename S::value_type& x2, double r) {
  if (!(r > 1.0)) throw InvalidParameters("limit distance bound needs r > 1");
  return s.rho(x1, x2) / (r * r - 1.0);
}

}  // namespace cf
