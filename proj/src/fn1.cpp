#include "cf/fn1.hpp"

#include "cf/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cf {

namespace {

constexpr double kValTol = 1e-9;    // continuity and f(0) = 0, relative
constexpr double kSlopeTol = 1e-9;  // convexity at knots, relative
constexpr double kMergeTol = 1e-12;

double rel(double x) { return 1.0 + std::abs(x); }

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol * std::max(rel(x), rel(y)); }

bool same_quad(const Quad& p, const Quad& q) {
  return near(p.a, q.a, kMergeTol) && near(p.b, q.b, kMergeTol) && near(p.c, q.c, kMergeTol);
}

/// A point strictly inside [p, q] (ends may be infinite).
double inside(double p, double q) {
  if (std::isinf(p) && std::isinf(q)) return 0.0;
  if (std::isinf(p)) return q - 1.0;
  if (std::isinf(q)) return p + 1.0;
  return 0.5 * (p + q);
}

/// Sorted knots of both functions strictly inside (lo, hi), plus 0.
std::vector<double> merged_breaks(double lo, double hi, std::initializer_list<const ConvexFn1*> fs,
                                  bool with_zero) {
  std::vector<double> ks;
  for (const ConvexFn1* f : fs) {
    for (const double k : f->knots()) {
      if (k > lo && k < hi) ks.push_back(k);
    }
  }
  if (with_zero && lo < 0.0 && hi > 0.0) ks.push_back(0.0);
  std::sort(ks.begin(), ks.end());
  // knots an ulp or so apart only bound sliver pieces
  ks.erase(std::unique(ks.begin(), ks.end(),
                       [](double a, double b) { return b - a <= 1e-14 * std::max(1.0, std::abs(b)); }),
           ks.end());
  return ks;
}

}  // namespace

ConvexFn1::ConvexFn1() : pieces_{Quad{}} {}

ConvexFn1 ConvexFn1::from_pieces(double lo, double hi, std::vector<double> knots,
                                 std::vector<Quad> pieces) {
  if (std::isnan(lo) || std::isnan(hi) || lo > 0.0 || hi < 0.0) {
    throw InvalidInput("domain must be an interval containing 0");
  }
  if (pieces.size() != knots.size() + 1) throw InvalidInput("need one more piece than knots");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i]) || knots[i] <= lo || knots[i] >= hi ||
        (i > 0 && knots[i] <= knots[i - 1])) {
      throw InvalidInput("knots must increase strictly inside the domain");
    }
  }
  for (const auto& q : pieces) {
    if (!std::isfinite(q.a) || !std::isfinite(q.b) || !std::isfinite(q.c) || q.a < 0.0) {
      throw InvalidInput("pieces must be finite with nonnegative curvature");
    }
  }
  if (lo == hi) {
    knots.clear();
    pieces.assign(1, Quad{});
  }

  ConvexFn1 f;
  f.lo_ = lo;
  f.hi_ = hi;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!f.pieces_.empty() && i > 0 && same_quad(f.pieces_.back(), pieces[i])) continue;
    if (i > 0) f.knots_.push_back(knots[i - 1]);
    if (i == 0) {
      f.pieces_.assign(1, pieces[0]);
    } else {
      f.pieces_.push_back(pieces[i]);
    }
  }

  for (std::size_t i = 0; i < f.knots_.size(); ++i) {
    const double k = f.knots_[i];
    const Quad& l = f.pieces_[i];
    const Quad& r = f.pieces_[i + 1];
    if (!near(l(k), r(k), kValTol)) {
      throw InvalidInput("function is discontinuous at x = " + std::to_string(k));
    }
    if (l.slope(k) > r.slope(k) + kSlopeTol * rel(l.slope(k))) {
      throw InvalidInput("slopes decrease at x = " + std::to_string(k) + " (not convex)");
    }
  }
  if (std::abs(f(0.0)) > kValTol) throw InvalidInput("f(0) must be 0");
  if (lo < 0.0 && hi > 0.0) {
    const std::size_t i = f.piece_at(0.0);
    const bool at_knot = i > 0 && f.knots_[i - 1] == 0.0;
    const double right = f.pieces_[i].slope(0.0);
    const double left = at_knot ? f.pieces_[i - 1].slope(0.0) : right;
    if (left > kSlopeTol || right < -kSlopeTol) throw InvalidInput("f must be minimized at 0 (f >= 0)");
  } else if (lo == 0.0 && hi > 0.0) {
    if (f.pieces_.front().slope(0.0) < -kSlopeTol) throw InvalidInput("f must be >= 0");
  } else if (hi == 0.0 && lo < 0.0) {
    if (f.pieces_.back().slope(0.0) > kSlopeTol) throw InvalidInput("f must be >= 0");
  }
  return f;
}

ConvexFn1 ConvexFn1::pl(std::span<const std::pair<double, double>> points, double left_slope,
                        double right_slope) {
  if (points.empty()) throw InvalidInput("PL function needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].first) || !std::isfinite(points[i].second)) {
      throw InvalidInput("PL points must be finite");
    }
    if (i > 0 && points[i].first <= points[i - 1].first) {
      throw InvalidInput("PL abscissae must increase strictly");
    }
  }
  if (std::isnan(left_slope) || std::isnan(right_slope)) throw InvalidInput("slope is NaN");
  const bool closed_left = std::isinf(left_slope);
  const bool closed_right = std::isinf(right_slope);
  const double lo = closed_left ? points.front().first : -kInf;
  const double hi = closed_right ? points.back().first : kInf;

  auto line = [](double slope, double x, double y) { return Quad{0.0, slope, y - slope * x}; };
  std::vector<double> knots;
  std::vector<Quad> pieces;
  if (!closed_left) pieces.push_back(line(left_slope, points.front().first, points.front().second));
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const auto [x0, y0] = points[i];
    const auto [x1, y1] = points[i + 1];
    if (!pieces.empty()) knots.push_back(x0);
    pieces.push_back(line((y1 - y0) / (x1 - x0), x0, y0));
  }
  if (!closed_right) {
    if (!pieces.empty()) knots.push_back(points.back().first);
    pieces.push_back(line(right_slope, points.back().first, points.back().second));
  }
  if (pieces.empty()) pieces.push_back(Quad{});  // single closed point
  return from_pieces(lo, hi, std::move(knots), std::move(pieces));
}

ConvexFn1 ConvexFn1::quadratic(double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidParameters("quadratic coefficient must be >= 0");
  return from_pieces(-kInf, kInf, {}, {Quad{c, 0.0, 0.0}});
}

ConvexFn1 ConvexFn1::abs(double m_left, double m_right) {
  if (!(m_left >= 0.0) || !(m_right >= 0.0)) throw InvalidParameters("slopes must be >= 0");
  return from_pieces(-kInf, kInf, {0.0}, {Quad{0.0, -m_left, 0.0}, Quad{0.0, m_right, 0.0}});
}

ConvexFn1 ConvexFn1::indicator(double lo, double hi) { return from_pieces(lo, hi, {}, {Quad{}}); }

bool ConvexFn1::is_pl() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Quad& q) { return q.a == 0.0; });
}

bool ConvexFn1::is_zero() const {
  return std::isinf(lo_) && std::isinf(hi_) && pieces_.size() == 1 && pieces_[0] == Quad{};
}

std::size_t ConvexFn1::piece_at(double x) const {
  return static_cast<std::size_t>(std::upper_bound(knots_.begin(), knots_.end(), x) - knots_.begin());
}

double ConvexFn1::operator()(double x) const {
  if (x < lo_ || x > hi_) return kInf;
  return pieces_[piece_at(x)](x);
}

ConvexFn1 add(const ConvexFn1& f, const ConvexFn1& g) {
  const double lo = std::max(f.lo(), g.lo());
  const double hi = std::min(f.hi(), g.hi());
  std::vector<double> ks = merged_breaks(lo, hi, {&f, &g}, false);
  std::vector<Quad> ps;
  for (std::size_t i = 0; i <= ks.size(); ++i) {
    const double x = inside(i == 0 ? lo : ks[i - 1], i == ks.size() ? hi : ks[i]);
    const Quad& p = f.pieces()[f.piece_at(x)];
    const Quad& q = g.pieces()[g.piece_at(x)];
    ps.push_back({p.a + q.a, p.b + q.b, p.c + q.c});
  }
  return ConvexFn1::from_pieces(lo, hi, std::move(ks), std::move(ps));
}

ConvexFn1 multiply(double s, const ConvexFn1& f) {
  if (!(s > 0.0) || !std::isfinite(s)) throw InvalidParameters("multiplier must be positive");
  std::vector<Quad> ps = f.pieces();
  for (auto& q : ps) q = {s * q.a, s * q.b, s * q.c};
  return ConvexFn1::from_pieces(f.lo(), f.hi(), f.knots(), std::move(ps));
}

ConvexFn1 scale_arg(double a, const ConvexFn1& f) {
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidParameters("scale must be positive");
  const double s = std::sqrt(a);
  std::vector<double> ks = f.knots();
  for (auto& k : ks) k /= s;
  std::vector<Quad> ps = f.pieces();
  for (auto& q : ps) q = {q.a * a, q.b * s, q.c};
  return ConvexFn1::from_pieces(f.lo() / s, f.hi() / s, std::move(ks), std::move(ps));
}

ConvexFn1 legendre(const ConvexFn1& f) {
  struct Range {
    double lo;
    double hi;
    Quad q;
  };
  std::vector<Range> out;
  // Rounding can leave neighbouring slope ranges overlapping by an ulp.
  auto push = [&out](double lo, double hi, Quad q) {
    if (!out.empty()) lo = std::max(lo, out.back().hi);
    if (hi > lo) out.push_back({lo, hi, q});
  };
  // Support line x y - f(x) over the subdifferential at x.
  auto point_line = [&f](double x) { return Quad{0.0, x, -f(x)}; };

  const std::size_t m = f.pieces().size();
  auto left_slope = [&](std::size_t i) {
    const Quad& q = f.pieces()[i];
    const double x = f.piece_lo(i);
    if (std::isinf(x)) return q.a > 0.0 ? -kInf : q.b;
    return q.slope(x);
  };
  auto right_slope = [&](std::size_t i) {
    const Quad& q = f.pieces()[i];
    const double x = f.piece_hi(i);
    if (std::isinf(x)) return q.a > 0.0 ? kInf : q.b;
    return q.slope(x);
  };

  if (std::isfinite(f.lo())) push(-kInf, left_slope(0), point_line(f.lo()));
  for (std::size_t i = 0; i < m; ++i) {
    const Quad& q = f.pieces()[i];
    if (q.a > 0.0) {
      push(left_slope(i), right_slope(i), Quad{1.0 / q.a, -q.b / q.a, q.b * q.b / (2.0 * q.a) - q.c});
    }
    if (i + 1 < m) push(right_slope(i), left_slope(i + 1), point_line(f.knots()[i]));
  }
  if (std::isfinite(f.hi())) push(right_slope(m - 1), kInf, point_line(f.hi()));

  if (out.empty()) {
    // f linear on R: its slope must be 0, conjugate is the indicator of {0}.
    return ConvexFn1::indicator(0.0, 0.0);
  }
  std::vector<double> ks;
  std::vector<Quad> ps;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i > 0) ks.push_back(out[i].lo);
    ps.push_back(out[i].q);
  }
  return ConvexFn1::from_pieces(out.front().lo, out.back().hi, std::move(ks), std::move(ps));
}

namespace {

struct Edge {
  double slope;
  double length;
};

/// Edges of a PL epigraph on one side of 0, walking away from 0, and the
/// slope of the unbounded tail (NaN when the domain ends).
void side_edges(const ConvexFn1& f, bool right, std::vector<Edge>& edges, double& tail) {
  tail = std::numeric_limits<double>::quiet_NaN();
  const std::size_t m = f.pieces().size();
  for (std::size_t i = 0; i < m; ++i) {
    const double a = std::max(f.piece_lo(i), right ? 0.0 : -kInf);
    const double b = std::min(f.piece_hi(i), right ? kInf : 0.0);
    if (!(b > a)) continue;
    const double s = f.pieces()[i].b;
    if ((right && std::isinf(b)) || (!right && std::isinf(a))) {
      tail = s;
    } else {
      edges.push_back({s, b - a});
    }
  }
}

}  // namespace

ConvexFn1 inf_conv(const ConvexFn1& f, const ConvexFn1& g) {
  if (!f.is_pl() || !g.is_pl()) return legendre(add(legendre(f), legendre(g)));

  std::vector<std::pair<double, double>> pts{{0.0, 0.0}};
  double right_tail = kInf;
  double left_tail = kInf;
  {
    std::vector<Edge> edges;
    double tf = 0.0;
    double tg = 0.0;
    side_edges(f, true, edges, tf);
    side_edges(g, true, edges, tg);
    double tail = kInf;
    if (!std::isnan(tf)) tail = tf;
    if (!std::isnan(tg)) tail = std::min(tail, tg);
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.slope < b.slope; });
    double x = 0.0;
    double y = 0.0;
    for (const auto& e : edges) {
      if (e.slope >= tail) break;
      x += e.length;
      y += e.slope * e.length;
      pts.emplace_back(x, y);
    }
    right_tail = tail;
  }
  {
    std::vector<Edge> edges;
    double tf = 0.0;
    double tg = 0.0;
    side_edges(f, false, edges, tf);
    side_edges(g, false, edges, tg);
    double tail = -kInf;
    if (!std::isnan(tf)) tail = tf;
    if (!std::isnan(tg)) tail = std::max(tail, tg);
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.slope > b.slope; });
    double x = 0.0;
    double y = 0.0;
    std::vector<std::pair<double, double>> left;
    for (const auto& e : edges) {
      if (e.slope <= tail) break;
      x -= e.length;
      y -= e.slope * e.length;
      left.emplace_back(x, y);
    }
    pts.insert(pts.begin(), left.rbegin(), left.rend());
    left_tail = std::isinf(tail) ? kInf : tail;
  }
  // pl() closes the domain on infinite slopes; right_tail = +inf already means closed.
  return ConvexFn1::pl(pts, left_tail, right_tail);
}

namespace {

/// dom g inside dom f, up to rounding.
bool domain_within(const ConvexFn1& g, const ConvexFn1& f) {
  const double tol = 1e-12;
  const bool lo_ok = f.lo() <= g.lo() || near(f.lo(), g.lo(), tol);
  const bool hi_ok = g.hi() <= f.hi() || near(f.hi(), g.hi(), tol);
  return lo_ok && hi_ok;
}

/// Value of alpha + 2 beta s + 2 gamma s^2 as s runs to +inf (dir > 0) or -inf.
double phi_limit(double alpha, double beta, double gamma, double dir) {
  if (gamma > 0.0) return kInf;
  if (gamma < 0.0) return -kInf;
  if (beta * dir > 0.0) return kInf;
  if (beta * dir < 0.0) return -kInf;
  return alpha;
}

/// sup over x in [p, q] (x != 0, interval on one side of 0) of
/// (1/2 alpha x^2 + beta x + gamma) / (x^2 / 2), via s = 1/x.
double sup_ratio(double alpha, double beta, double gamma, double p, double q) {
  double s1;
  double s2;
  bool s1_inf = false;
  bool s2_inf = false;
  if (p >= 0.0) {
    s1 = std::isinf(q) ? 0.0 : 1.0 / q;
    s2 = p == 0.0 ? kInf : 1.0 / p;
    s2_inf = p == 0.0;
  } else {
    s1 = q == 0.0 ? -kInf : 1.0 / q;
    s1_inf = q == 0.0;
    s2 = std::isinf(p) ? 0.0 : 1.0 / p;
  }
  auto phi = [&](double s) { return alpha + 2.0 * beta * s + 2.0 * gamma * s * s; };
  double best = -kInf;
  best = std::max(best, s1_inf ? phi_limit(alpha, beta, gamma, -1.0) : phi(s1));
  best = std::max(best, s2_inf ? phi_limit(alpha, beta, gamma, 1.0) : phi(s2));
  if (gamma < 0.0) {
    const double s = -beta / (2.0 * gamma);
    if (s > s1 && s < s2) best = std::max(best, phi(s));
  }
  return best;
}

/// sup over dom g of (f - g) / (x^2 / 2) (or of f / (x^2/2) with g = nullptr,
/// negated when lower is set, giving -inf of the ratio).
double ratio_sup(const ConvexFn1& f, const ConvexFn1* g, bool lower) {
  const ConvexFn1& dom = g ? *g : f;
  const double lo = dom.lo();
  const double hi = dom.hi();
  if (lo == 0.0 && hi == 0.0) return -kInf;
  std::vector<double> ks = g ? merged_breaks(lo, hi, {&f, g}, true) : merged_breaks(lo, hi, {&f}, true);
  const double sign = lower ? -1.0 : 1.0;
  double best = -kInf;
  for (std::size_t i = 0; i <= ks.size(); ++i) {
    const double p = i == 0 ? lo : ks[i - 1];
    const double q = i == ks.size() ? hi : ks[i];
    if (!(q > p)) continue;
    const double x = inside(p, q);
    const Quad& qf = f.pieces()[f.piece_at(x)];
    Quad qg{};
    if (g) qg = g->pieces()[g->piece_at(x)];
    double alpha = sign * (qf.a - qg.a);
    double beta = sign * (qf.b - qg.b);
    double gamma = sign * (qf.c - qg.c);
    if (p == 0.0 || q == 0.0) {
      // both vanish at 0; one-sided slopes decide the limit there
      gamma = 0.0;
      if (std::abs(beta) <= 1e-12 * (1.0 + std::abs(qf.b) + std::abs(qg.b))) beta = 0.0;
    }
    best = std::max(best, sup_ratio(alpha, beta, gamma, p, q));
  }
  return best;
}

}  // namespace

double excess_h(const ConvexFn1& f, const ConvexFn1& g) {
  if (!domain_within(g, f)) return kInf;
  return std::max(0.0, ratio_sup(f, &g, false));
}

double rho_h(const ConvexFn1& f, const ConvexFn1& g) {
  return std::max(excess_h(f, g), excess_h(g, f));
}

QuadBounds quad_bounds(const ConvexFn1& f) {
  if (f.lo() == 0.0 && f.hi() == 0.0) return {kInf, kInf};
  QuadBounds qb;
  qb.r = std::max(0.0, -ratio_sup(f, nullptr, true));
  qb.big_r = (std::isinf(f.lo()) && std::isinf(f.hi())) ? ratio_sup(f, nullptr, false) : kInf;
  return qb;
}

double max_abs_diff(const ConvexFn1& f, const ConvexFn1& g) {
  if (!domain_within(f, g) || !domain_within(g, f)) return kInf;
  const double lo = std::max(f.lo(), g.lo());
  const double hi = std::min(f.hi(), g.hi());
  const std::vector<double> ks = merged_breaks(lo, hi, {&f, &g}, false);
  double best = 0.0;
  for (std::size_t i = 0; i <= ks.size(); ++i) {
    const double p = i == 0 ? lo : ks[i - 1];
    const double q = i == ks.size() ? hi : ks[i];
    const double x = inside(p, q);
    const Quad& a = f.pieces()[f.piece_at(x)];
    const Quad& b = g.pieces()[g.piece_at(x)];
    const Quad d{a.a - b.a, a.b - b.b, a.c - b.c};
    const double scale = 1.0 + std::abs(a.a) + std::abs(b.a) + std::abs(a.b) + std::abs(b.b);
    if (std::isinf(p) || std::isinf(q)) {
      if (std::abs(d.a) > 1e-12 * scale || std::abs(d.b) > 1e-12 * scale) return kInf;
    }
    if (std::isfinite(p)) best = std::max(best, std::abs(d(p)));
    if (std::isfinite(q)) best = std::max(best, std::abs(d(q)));
    if (std::isinf(p) && std::isinf(q)) best = std::max(best, std::abs(d.c));
    if (d.a != 0.0) {
      const double v = -d.b / d.a;
      if (v > p && v < q) best = std::max(best, std::abs(d(v)));
    }
  }
  return best;
}

bool pointwise_leq(const ConvexFn1& f, const ConvexFn1& g, double tol) {
  if (!domain_within(g, f)) return false;
  const std::vector<double> ks = merged_breaks(g.lo(), g.hi(), {&f, &g}, false);
  for (std::size_t i = 0; i <= ks.size(); ++i) {
    const double p = i == 0 ? g.lo() : ks[i - 1];
    const double q = i == ks.size() ? g.hi() : ks[i];
    const double x = inside(p, q);
    const Quad& a = f.pieces()[f.piece_at(x)];
    const Quad& b = g.pieces()[g.piece_at(x)];
    const Quad d{a.a - b.a, a.b - b.b, a.c - b.c};
    if (std::isinf(q) && (d.a > 0.0 || (d.a == 0.0 && d.b > 1e-12 * (1.0 + std::abs(a.b))))) return false;
    if (std::isinf(p) && (d.a > 0.0 || (d.a == 0.0 && d.b < -1e-12 * (1.0 + std::abs(a.b))))) return false;
    if (std::isfinite(p) && d(p) > tol) return false;
    if (std::isfinite(q) && d(q) > tol) return false;
    if (d.a < 0.0) {
      const double v = -d.b / d.a;
      if (v > p && v < q && d(v) > tol) return false;
    }
  }
  return true;
}

double c_profile_lf(double big_r) { return LipschitzProfile::legendre_fenchel()(big_r); }

ConditionReport check_legendre_theorem(double r, double big_r) {
  ConditionReport rep;
  rep.criterion = "legendre-theorem";
  rep.param("r", r).param("R", big_r);
  if (!(r > 0.0)) {
    rep.verdict = Verdict::kFails;
    rep.witness(0, 0.0, "r");
    rep.note = "r = 0: no quadratic lower bound";
    return rep;
  }
  if (big_r < r) throw InvalidParameters("need r <= R");
  const double lhs = r * r + 4.0 * r / big_r;
  rep.witness(0, lhs, "r^2+4r/R");
  rep.verdict = lhs > 4.0 ? Verdict::kHolds : Verdict::kFails;
  return rep;
}

ConditionReport check_legendre_theorem(const ConvexFn1& f) {
  const QuadBounds qb = quad_bounds(f);
  return check_legendre_theorem(qb.r, qb.big_r);
}

namespace {

struct Line {
  double m;
  double c;
};

void require_pl(const ConvexFn1& f, const char* what) {
  if (!f.is_pl()) throw InvalidInput(std::string(what) + " needs a piecewise linear function");
}

/// Upper envelope of lines restricted to [lo, hi], as a PL function.
ConvexFn1 envelope(std::vector<Line> lines, double lo, double hi) {
  if (lo == hi) return ConvexFn1::indicator(0.0, 0.0);
  std::sort(lines.begin(), lines.end(),
            [](const Line& a, const Line& b) { return a.m < b.m || (a.m == b.m && a.c > b.c); });
  std::vector<Line> uniq;
  for (const auto& l : lines) {
    if (!uniq.empty() && uniq.back().m == l.m) continue;
    uniq.push_back(l);
  }
  auto cross_x = [](const Line& a, const Line& b) { return (a.c - b.c) / (b.m - a.m); };
  std::vector<Line> hull;
  for (const auto& l : uniq) {
    while (hull.size() >= 2 &&
           cross_x(hull[hull.size() - 2], l) <= cross_x(hull[hull.size() - 2], hull.back())) {
      hull.pop_back();
    }
    hull.push_back(l);
  }
  std::vector<double> ks;
  std::vector<Quad> ps;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const double from = i == 0 ? -kInf : cross_x(hull[i - 1], hull[i]);
    const double to = i + 1 == hull.size() ? kInf : cross_x(hull[i], hull[i + 1]);
    if (to <= lo || from >= hi) continue;
    if (!ps.empty()) ks.push_back(from);
    ps.push_back({0.0, hull[i].m, hull[i].c});
  }
  return ConvexFn1::from_pieces(lo, hi, std::move(ks), std::move(ps));
}

}  // namespace

ConvexFn1 a_transform(const ConvexFn1& f) {
  require_pl(f, "A-transform");
  constexpr double kFlat = 1e-12;
  const auto& ps = f.pieces();
  const std::size_t m = ps.size();

  // Zero set [z_lo, z_hi]: walk away from 0 while the slope stays flat.
  const std::size_t at0 = f.piece_at(0.0);
  double z_hi = 0.0;
  for (std::size_t i = at0; i < m; ++i) {
    if (f.piece_hi(i) <= 0.0) continue;
    if (std::abs(ps[i].b) > kFlat * rel(ps[i].b) || std::abs(ps[i].c) > kFlat) break;
    z_hi = f.piece_hi(i);
  }
  double z_lo = 0.0;
  for (std::size_t i = at0 + 1; i-- > 0;) {
    if (f.piece_lo(i) >= 0.0) continue;
    if (std::abs(ps[i].b) > kFlat * rel(ps[i].b) || std::abs(ps[i].c) > kFlat) break;
    z_lo = f.piece_lo(i);
  }
  const double pol_lo = z_lo == 0.0 ? -kInf : 1.0 / z_lo;
  const double pol_hi = z_hi == 0.0 ? kInf : 1.0 / z_hi;

  std::vector<Line> lines;
  auto add_point = [&](double y) {
    if (y >= z_lo && y <= z_hi) return;
    const double v = f(y);
    lines.push_back({y / v, -1.0 / v});
  };
  for (const double k : f.knots()) add_point(k);
  if (std::isfinite(f.lo())) add_point(f.lo());
  if (std::isfinite(f.hi())) add_point(f.hi());
  if (std::isinf(f.hi()) && ps.back().b > 0.0 && z_hi < kInf) lines.push_back({1.0 / ps.back().b, 0.0});
  if (std::isinf(f.lo()) && ps.front().b < 0.0 && z_lo > -kInf) lines.push_back({1.0 / ps.front().b, 0.0});
  if (std::isfinite(f.lo()) || std::isfinite(f.hi()) || lines.empty()) lines.push_back({0.0, 0.0});
  return envelope(std::move(lines), pol_lo, pol_hi);
}

double excess_wrt(const ConvexFn1& f, const ConvexFn1& g, const ConvexFn1& h) {
  require_pl(f, "rho_wrt");
  require_pl(g, "rho_wrt");
  require_pl(h, "rho_wrt");
  if (std::isfinite(h.lo()) || std::isfinite(h.hi())) throw InvalidInput("reference function must be finite on R");
  if (!domain_within(g, f)) return kInf;
  const double lo = g.lo();
  const double hi = g.hi();
  if (lo == 0.0 && hi == 0.0) return 0.0;
  const std::vector<double> ks = merged_breaks(lo, hi, {&f, &g, &h}, true);
  double best = 0.0;
  for (std::size_t i = 0; i <= ks.size(); ++i) {
    const double p = i == 0 ? lo : ks[i - 1];
    const double q = i == ks.size() ? hi : ks[i];
    if (!(q > p)) continue;
    const double x = inside(p, q);
    const Quad& a = f.pieces()[f.piece_at(x)];
    const Quad& b = g.pieces()[g.piece_at(x)];
    const Quad& w = h.pieces()[h.piece_at(x)];
    double beta = a.b - b.b;
    const double gamma = a.c - b.c;
    const bool at_zero = p == 0.0 || q == 0.0;
    if (at_zero && std::abs(beta) <= 1e-12 * (1.0 + std::abs(a.b) + std::abs(b.b))) beta = 0.0;
    auto value_at = [&](double e) {
      if (e == 0.0 || std::isinf(e)) {
        if (w.b != 0.0) return beta / w.b;
        if (beta != 0.0) return beta * (e > 0.0 ? 1.0 : -1.0) > 0.0 ? kInf : -kInf;
        return gamma / w.c;
      }
      return (beta * e + gamma) / w(e);
    };
    best = std::max({best, value_at(p), value_at(q)});
  }
  return best;
}

double rho_wrt(const ConvexFn1& f, const ConvexFn1& g, const ConvexFn1& h) {
  return std::max(excess_wrt(f, g, h), excess_wrt(g, f, h));
}

double hp_constant(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InvalidParameters("h_p needs p >= 1");
  if (p == 1.0) return 1.0;
  return std::sqrt(std::pow(p - 1.0, p - 1.0) / std::pow(p, p));
}

SampledFn hp_construct(double p, int n, double extent) {
  const double c = hp_constant(p);
  if (n < 2) throw InvalidParameters("h_p grid needs at least 2 cells");
  if (!(extent > 0.0) || !std::isfinite(extent)) throw InvalidParameters("h_p extent must be positive");
  if (n % 2 == 1) ++n;
  SampledFn out;
  out.extent = extent;
  if (p == 1.0) {
    out.fn = ConvexFn1::abs();
    return out;
  }
  auto hp = [&](double x) { return c * std::pow(std::abs(x), p); };
  std::vector<std::pair<double, double>> pts;
  for (int k = 0; k <= n; ++k) {
    const double x = k == n / 2 ? 0.0 : extent * (2.0 * k / n - 1.0);
    pts.emplace_back(x, hp(x));
  }
  out.window_lo = p / ((p - 1.0) * extent);
  // Largest chord gap: the tangent parallel to the chord touches at u.
  for (int k = n / 2; k < n; ++k) {
    const double x0 = pts[static_cast<std::size_t>(k)].first;
    const double x1 = pts[static_cast<std::size_t>(k) + 1].first;
    const double slope = (hp(x1) - hp(x0)) / (x1 - x0);
    const double u = std::pow(slope / (c * p), 1.0 / (p - 1.0));
    const double gap = hp(x0) + slope * (u - x0) - hp(u);
    out.bound = std::max(out.bound, gap);
    if (x1 >= out.window_lo) out.rel_bound = std::max(out.rel_bound, gap / hp(std::max(x0, out.window_lo)));
  }
  const double edge = c * p * std::pow(extent, p - 1.0);
  out.fn = ConvexFn1::pl(pts, -edge, edge);
  return out;
}

double window_rel_diff(const ConvexFn1& f, const ConvexFn1& g, double lo, double hi) {
  require_pl(f, "window_rel_diff");
  require_pl(g, "window_rel_diff");
  if (!(lo > 0.0) || !(hi >= lo)) throw InvalidParameters("need 0 < lo <= hi");
  // |f - g| / g is monotone between consecutive knots (ratio of affine maps).
  std::vector<double> xs{lo, hi, -lo, -hi};
  for (const ConvexFn1* fn : {&f, &g}) {
    for (const double k : fn->knots()) {
      if (std::abs(k) >= lo && std::abs(k) <= hi) xs.push_back(k);
    }
  }
  double best = 0.0;
  for (const double x : xs) best = std::max(best, std::abs(f(x) - g(x)) / g(x));
  return best;
}

ConditionReport check_a_xh(const ConvexFn1& f, const ConvexFn1& h_sp, double t) {
  if (!(t > 0.0)) throw InvalidParameters("t must be positive");
  ConditionReport rep;
  rep.criterion = "a-xh";
  rep.param("t", t);
  if (!pointwise_leq(h_sp, f, 1e-12)) {
    rep.verdict = Verdict::kNotApplicable;
    rep.note = "f >= h_sp fails";
    return rep;
  }
  const double self = rho_wrt(a_transform(h_sp), h_sp, h_sp);
  rep.witness(0, self, "h_sp self-polar residual");
  const ConvexFn1 ft = add(f, multiply(t, h_sp));
  const double lhs = rho_wrt(a_transform(f), a_transform(ft), h_sp);
  rep.witness(1, lhs, "rho(f^o, (f+th)^o)").witness(2, t - lhs, "slack");
  rep.verdict = lhs <= t * (1.0 + 1e-9) + 1e-12 ? Verdict::kHolds : Verdict::kFails;
  return rep;
}

}  // namespace cf
