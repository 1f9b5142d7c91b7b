#include "cf/body2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "cf/simd/kernels.hpp"

namespace cf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;
// Angular tolerance on unit vectors.
constexpr double kAngEps = 1e-10;
// Relative tolerance on coordinates, multiplied by the point-set scale.
constexpr double kRelEps = 1e-11;
// Relative distance below which a hull vertex counts as collinear.
constexpr double kCollinearEps = 1e-13;

void check_finite(Vec2 p, const char* what) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw InvalidInput(std::string(what) + " has a non-finite coordinate");
  }
}

double scale_of(std::span<const Vec2> pts) {
  double s = 1.0;
  for (const auto& p : pts) s = std::max(s, norm(p));
  return s;
}

/// Unit rays, sorted by angle, near-duplicates removed.
std::vector<Vec2> clean_rays(std::span<const Vec2> rays) {
  std::vector<std::pair<double, Vec2>> tagged;
  for (const auto& w : rays) {
    check_finite(w, "ray");
    const double len = norm(w);
    if (len == 0.0) throw InvalidInput("ray must be nonzero");
    const Vec2 u = w / len;
    tagged.emplace_back(angle_of(u), u);
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Vec2> out;
  double last = -1.0;
  for (const auto& [ang, u] : tagged) {
    if (!out.empty() && ang - last <= kAngEps) continue;
    out.push_back(u);
    last = ang;
  }
  // Wrap-around duplicate near angle 0 / 2 pi.
  if (out.size() > 1 && angle_of(out.front()) + kTwoPi - angle_of(out.back()) <= kAngEps) {
    out.pop_back();
  }
  return out;
}

enum class ConeKind { kZero, kRay, kWedge, kHalfplane, kLine, kPlane };

struct Cone {
  ConeKind kind = ConeKind::kZero;
  Vec2 a;  // ray / clockwise boundary / outward normal / line direction
  Vec2 b;  // counter-clockwise boundary of a wedge
};

Cone classify(const std::vector<Vec2>& rays) {
  const std::size_t m = rays.size();
  if (m == 0) return {ConeKind::kZero, {}, {}};
  if (m == 1) return {ConeKind::kRay, rays[0], rays[0]};
  std::size_t gap_at = 0;
  double widest = -1.0;
  for (std::size_t i = 0; i < m; ++i) {
    double g = angle_of(rays[(i + 1) % m]) - angle_of(rays[i]);
    if (i + 1 == m) g += kTwoPi;
    if (g > widest) {
      widest = g;
      gap_at = i;
    }
  }
  const Vec2 ccw_edge = rays[gap_at];
  const Vec2 cw_edge = rays[(gap_at + 1) % m];
  if (widest > kPi + kAngEps) return {ConeKind::kWedge, cw_edge, ccw_edge};
  if (widest >= kPi - kAngEps) {
    if (m == 2) return {ConeKind::kLine, rays[0], {}};
    return {ConeKind::kHalfplane, rotate_ccw(ccw_edge), {}};
  }
  return {ConeKind::kPlane, {}, {}};
}

/// Counter-clockwise convex hull without collinear points (Andrew's chain).
std::vector<Vec2> convex_hull(std::vector<Vec2> pts, double eps) {
  std::sort(pts.begin(), pts.end(),
            [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Vec2> uniq;
  for (const auto& p : pts) {
    if (!uniq.empty() && norm(p - uniq.back()) <= eps) continue;
    uniq.push_back(p);
  }
  if (uniq.size() <= 2) {
    if (uniq.size() == 2 && norm(uniq[1] - uniq[0]) <= eps) uniq.pop_back();
    return uniq;
  }
  // Middle point dropped when within dist_eps of the chord.
  const double dist_eps = kCollinearEps * scale_of(uniq);
  auto not_left = [dist_eps](Vec2 a, Vec2 b, Vec2 c) {
    return cross(b - a, c - a) <= dist_eps * norm(c - a);
  };
  std::vector<Vec2> hull(2 * uniq.size());
  std::size_t k = 0;
  for (const auto& p : uniq) {
    while (k >= 2 && not_left(hull[k - 2], hull[k - 1], p)) --k;
    hull[k++] = p;
  }
  for (std::size_t i = uniq.size() - 1, lower = k + 1; i-- > 0;) {
    const Vec2 p = uniq[i];
    while (k >= lower && not_left(hull[k - 2], hull[k - 1], p)) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  if (hull.size() == 1 && norm(uniq.back() - uniq.front()) > eps) {
    // All points collinear: keep the two extremes.
    return {uniq.front(), uniq.back()};
  }
  return hull;
}

struct RawFacet {
  Vec2 u;     // unit outward normal
  double s;   // support value >= 0
};

std::vector<Halfplane> to_canonical(std::vector<RawFacet> raw, double eps) {
  std::sort(raw.begin(), raw.end(),
            [](const RawFacet& a, const RawFacet& b) { return angle_of(a.u) < angle_of(b.u); });
  std::vector<RawFacet> kept;
  for (const auto& f : raw) {
    if (!kept.empty() && angle_of(f.u) - angle_of(kept.back().u) <= kAngEps) {
      kept.back().s = std::min(kept.back().s, f.s);
      continue;
    }
    kept.push_back(f);
  }
  if (kept.size() > 1 && angle_of(kept.front().u) + kTwoPi - angle_of(kept.back().u) <= kAngEps) {
    kept.front().s = std::min(kept.front().s, kept.back().s);
    kept.pop_back();
  }
  std::vector<Halfplane> out;
  out.reserve(kept.size());
  for (const auto& f : kept) {
    if (f.s <= eps) {
      out.push_back({f.u, 0.0});
    } else {
      out.push_back({f.u / f.s, 1.0});
    }
  }
  return out;
}

/// Canonical facets of conv({0} u points) + cone(rays).
std::vector<Halfplane> canonical_facets(std::span<const Vec2> points_in,
                                        std::span<const Vec2> rays_in) {
  std::vector<Vec2> pts;
  pts.reserve(points_in.size() + 1);
  for (const auto& p : points_in) {
    check_finite(p, "point");
    pts.push_back(p);
  }
  pts.push_back({0.0, 0.0});
  const std::vector<Vec2> rays = clean_rays(rays_in);
  const double eps = kRelEps * scale_of(pts);
  const Cone cone = classify(rays);

  auto max_proj = [&pts](Vec2 u) {
    double s = 0.0;
    for (const auto& p : pts) s = std::max(s, dot(u, p));
    return s;
  };

  std::vector<RawFacet> raw;
  switch (cone.kind) {
    case ConeKind::kPlane:
      return {};
    case ConeKind::kHalfplane:
      raw.push_back({cone.a, max_proj(cone.a)});
      return to_canonical(std::move(raw), eps);
    case ConeKind::kLine: {
      const Vec2 n = rotate_ccw(cone.a);
      raw.push_back({n, max_proj(n)});
      raw.push_back({-n, max_proj(-n)});
      return to_canonical(std::move(raw), eps);
    }
    default:
      break;
  }

  const std::vector<Vec2> hull = convex_hull(pts, eps);
  int dim = 2;
  Vec2 line_dir{};
  if (cone.kind == ConeKind::kZero) {
    if (hull.size() <= 2) {
      dim = static_cast<int>(hull.size()) - 1;
      if (dim == 1) line_dir = unit(hull[1] - hull[0]);
    }
  } else if (cone.kind == ConeKind::kRay) {
    if (hull.size() == 1) {
      dim = 1;
      line_dir = cone.a;
    } else if (hull.size() == 2) {
      const Vec2 e = hull[1] - hull[0];
      if (std::abs(cross(unit(e), cone.a)) <= kAngEps) {
        dim = 1;
        line_dir = cone.a;
      }
    }
  }

  if (dim == 0) {
    for (const Vec2 u : {Vec2{1, 0}, Vec2{0, 1}, Vec2{-1, 0}, Vec2{0, -1}}) raw.push_back({u, 0.0});
    return to_canonical(std::move(raw), eps);
  }

  if (dim == 1) {
    double t_min = 0.0;
    double t_max = 0.0;
    for (const auto& q : hull) {
      t_min = std::min(t_min, dot(line_dir, q));
      t_max = std::max(t_max, dot(line_dir, q));
    }
    if (cone.kind == ConeKind::kRay) {
      if (dot(cone.a, line_dir) > 0.0) {
        t_max = kInf;
      } else {
        t_min = -kInf;
      }
    }
    const Vec2 n = rotate_ccw(line_dir);
    raw.push_back({n, 0.0});
    raw.push_back({-n, 0.0});
    if (std::isfinite(t_max)) raw.push_back({line_dir, t_max});
    if (std::isfinite(t_min)) raw.push_back({-line_dir, -t_min});
    return to_canonical(std::move(raw), eps);
  }

  std::vector<Vec2> candidates;
  if (hull.size() >= 2) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Vec2 e = hull[(i + 1) % hull.size()] - hull[i];
      candidates.push_back(unit(rotate_cw(e)));
    }
  }
  if (cone.kind == ConeKind::kRay) {
    candidates.push_back(rotate_ccw(cone.a));
    candidates.push_back(rotate_cw(cone.a));
  } else if (cone.kind == ConeKind::kWedge) {
    candidates.push_back(rotate_cw(cone.a));
    candidates.push_back(rotate_ccw(cone.b));
  }
  for (const auto& u : candidates) {
    bool in_polar_cone = true;
    bool touches_ray = false;
    for (const auto& w : rays) {
      const double d = dot(u, w);
      if (d > kAngEps) in_polar_cone = false;
      if (std::abs(d) <= kAngEps) touches_ray = true;
    }
    if (!in_polar_cone) continue;
    const double s = max_proj(u);
    int on_face = 0;
    for (const auto& q : hull) {
      if (dot(u, q) >= s - eps) ++on_face;
    }
    if (on_face >= 2 || touches_ray) raw.push_back({u, s});
  }
  return to_canonical(std::move(raw), eps);
}

/// Generators of the polar set read off a facet list.
void polar_generators(const std::vector<Halfplane>& hs, std::vector<Vec2>& points,
                      std::vector<Vec2>& rays) {
  points.clear();
  rays.clear();
  for (const auto& h : hs) {
    if (h.offset > 0.0) {
      points.push_back(h.normal / h.offset);
    } else {
      rays.push_back(h.normal);
    }
  }
}

std::vector<double> interleave(const std::vector<Vec2>& pts) {
  std::vector<double> xy;
  xy.reserve(2 * pts.size());
  for (const auto& p : pts) {
    xy.push_back(p.x);
    xy.push_back(p.y);
  }
  return xy;
}

}  // namespace

ConvexBody2::ConvexBody2()
    : halfplanes_{{{1, 0}, 0.0}, {{0, 1}, 0.0}, {{-1, 0}, 0.0}, {{0, -1}, 0.0}} {}

ConvexBody2::ConvexBody2(std::vector<Vec2> vertices, std::vector<Vec2> rays,
                         std::vector<Halfplane> halfplanes)
    : vertices_(std::move(vertices)), rays_(std::move(rays)), halfplanes_(std::move(halfplanes)) {}

ConvexBody2 ConvexBody2::from_generators(std::span<const Vec2> points, std::span<const Vec2> rays) {
  std::vector<Halfplane> hs = canonical_facets(points, rays);
  std::vector<Vec2> dual_points;
  std::vector<Vec2> dual_rays;
  polar_generators(hs, dual_points, dual_rays);
  const std::vector<Halfplane> dual = canonical_facets(dual_points, dual_rays);
  std::vector<Vec2> vs;
  std::vector<Vec2> rs;
  polar_generators(dual, vs, rs);
  return ConvexBody2(std::move(vs), std::move(rs), std::move(hs));
}

ConvexBody2 ConvexBody2::from_halfplanes(std::span<const Halfplane> halfplanes) {
  std::vector<Vec2> dual_points;
  std::vector<Vec2> dual_rays;
  for (const auto& h : halfplanes) {
    check_finite(h.normal, "halfplane normal");
    if (!std::isfinite(h.offset) || h.offset < 0.0) {
      throw InvalidInput("halfplane offset must be finite and >= 0 (origin must be inside)");
    }
    if (norm(h.normal) == 0.0) throw InvalidInput("halfplane normal must be nonzero");
    if (h.offset > 0.0) {
      dual_points.push_back(h.normal / h.offset);
    } else {
      dual_rays.push_back(h.normal);
    }
  }
  const std::vector<Halfplane> dual = canonical_facets(dual_points, dual_rays);
  std::vector<Vec2> vs;
  std::vector<Vec2> rs;
  polar_generators(dual, vs, rs);
  return from_generators(vs, rs);
}

ConvexBody2 ConvexBody2::from_representation(std::vector<Vec2> vertices, std::vector<Vec2> rays,
                                             std::vector<Halfplane> halfplanes, double tol) {
  const ConvexBody2 ref = from_generators(vertices, rays);
  auto close = [tol](Vec2 a, Vec2 b) { return norm(a - b) <= tol * std::max(1.0, norm(b)); };
  bool ok = ref.vertices_.size() == vertices.size() && ref.rays_.size() == rays.size() &&
            ref.halfplanes_.size() == halfplanes.size();
  // Angles at the 0 / 2 pi seam may sort to either end, so allow a cyclic shift.
  auto cyclic = [&](auto&& same, std::size_t n) {
    if (n == 0) return true;
    for (std::size_t s = 0; s < n; ++s) {
      bool all = true;
      for (std::size_t i = 0; all && i < n; ++i) all = same(i, (i + s) % n);
      if (all) return true;
    }
    return false;
  };
  ok = ok && cyclic([&](std::size_t i, std::size_t j) { return close(vertices[i], ref.vertices_[j]); },
                    vertices.size());
  ok = ok && cyclic([&](std::size_t i, std::size_t j) { return close(rays[i], ref.rays_[j]); }, rays.size());
  ok = ok && cyclic(
                 [&](std::size_t i, std::size_t j) {
                   return halfplanes[i].offset == ref.halfplanes_[j].offset &&
                          close(halfplanes[i].normal, ref.halfplanes_[j].normal);
                 },
                 halfplanes.size());
  if (!ok) throw InvalidInput("stored representation does not match its generators");
  return ConvexBody2(std::move(vertices), std::move(rays), std::move(halfplanes));
}

ConvexBody2 ConvexBody2::whole_plane() {
  return ConvexBody2({}, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {});
}

bool ConvexBody2::contains(Vec2 p, double tol) const {
  for (const auto& h : halfplanes_) {
    if (dot(h.normal, p) > h.offset + tol * norm(h.normal)) return false;
  }
  return true;
}

bool ConvexBody2::recedes(Vec2 d) const {
  const double len = norm(d);
  for (const auto& h : halfplanes_) {
    if (dot(h.normal, d) > kAngEps * norm(h.normal) * len) return false;
  }
  return true;
}

double support(const ConvexBody2& k, Vec2 u) {
  const double len = norm(u);
  for (const auto& w : k.rays()) {
    if (dot(w, u) > kAngEps * len) return kInf;
  }
  if (k.vertices().empty()) return 0.0;
  const std::vector<double> xy = interleave(k.vertices());
  return std::max(0.0, simd::max_dot(xy, u.x, u.y));
}

double radial(const ConvexBody2& k, Vec2 u) {
  double best = kInf;
  const double len = norm(u);
  for (const auto& h : k.halfplanes()) {
    const double d = dot(h.normal, u);
    if (d <= kAngEps * norm(h.normal) * len) continue;
    best = std::min(best, h.offset / d);
  }
  return best;
}

ConvexBody2 polar(const ConvexBody2& k) {
  std::vector<Vec2> vs;
  std::vector<Vec2> rs;
  polar_generators(k.halfplanes_, vs, rs);
  std::vector<Halfplane> hs;
  hs.reserve(k.vertices_.size() + k.rays_.size());
  for (const auto& v : k.vertices_) hs.push_back({v, 1.0});
  for (const auto& w : k.rays_) hs.push_back({w, 0.0});
  std::stable_sort(hs.begin(), hs.end(), [](const Halfplane& a, const Halfplane& b) {
    return angle_of(a.normal) < angle_of(b.normal);
  });
  return ConvexBody2(std::move(vs), std::move(rs), std::move(hs));
}

namespace {

/// Hull of the vertex set including the origin, rotated so it starts at the
/// lowest (then leftmost) point.
std::vector<Vec2> anchored_hull(const ConvexBody2& k) {
  std::vector<Vec2> pts = k.vertices();
  pts.push_back({0.0, 0.0});
  std::vector<Vec2> hull = convex_hull(pts, kRelEps * scale_of(pts));
  auto lowest = std::min_element(hull.begin(), hull.end(), [](Vec2 a, Vec2 b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  std::rotate(hull.begin(), lowest, hull.end());
  return hull;
}

}  // namespace

ConvexBody2 minkowski_sum(const ConvexBody2& k, const ConvexBody2& l) {
  std::vector<Vec2> rays = k.rays();
  rays.insert(rays.end(), l.rays().begin(), l.rays().end());

  std::vector<Vec2> p = anchored_hull(k);
  std::vector<Vec2> q = anchored_hull(l);
  std::vector<Vec2> sums;
  if (p.size() >= 3 && q.size() >= 3) {
    // Edge merge of two convex polygons, O(|p| + |q|).
    const std::size_t n = p.size();
    const std::size_t m = q.size();
    p.push_back(p[0]);
    p.push_back(p[1]);
    q.push_back(q[0]);
    q.push_back(q[1]);
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < n || j < m) {
      sums.push_back(p[i] + q[j]);
      const double c = cross(p[i + 1] - p[i], q[j + 1] - q[j]);
      if (c >= 0.0 && i < n) ++i;
      if (c <= 0.0 && j < m) ++j;
    }
  } else {
    sums.reserve(p.size() * q.size());
    for (const auto& a : p) {
      for (const auto& b : q) sums.push_back(a + b);
    }
  }
  return ConvexBody2::from_generators(sums, rays);
}

ConvexBody2 hull_union(const ConvexBody2& k, const ConvexBody2& l) {
  std::vector<Vec2> pts = k.vertices();
  pts.insert(pts.end(), l.vertices().begin(), l.vertices().end());
  std::vector<Vec2> rays = k.rays();
  rays.insert(rays.end(), l.rays().begin(), l.rays().end());
  return ConvexBody2::from_generators(pts, rays);
}

ConvexBody2 scale(double a, const ConvexBody2& k) {
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidParameters("scale factor must be positive");
  std::vector<Vec2> vs;
  vs.reserve(k.vertices_.size());
  for (const auto& v : k.vertices_) vs.push_back(a * v);
  std::vector<Halfplane> hs = k.halfplanes_;
  for (auto& h : hs) {
    if (h.offset > 0.0) h.normal = h.normal / a;
  }
  return ConvexBody2(std::move(vs), k.rays_, std::move(hs));
}

namespace {

struct Arc {
  double start = 0.0;
  double end = 0.0;
  bool finite = false;
  Vec2 vertex;
};

bool finite_support(const ConvexBody2& k, Vec2 u) {
  for (const auto& w : k.rays()) {
    if (dot(w, u) > kAngEps) return false;
  }
  return true;
}

/// Arcs between consecutive facet normals with the support point that is
/// active on each arc.  The support point walks the hull monotonically, so
/// this is linear after the hull; intersecting nearly parallel facet lines
/// instead would be ill-conditioned.
std::vector<Arc> support_arcs(const ConvexBody2& k) {
  const auto& hs = k.halfplanes();
  const std::size_t m = hs.size();
  // Vertices are in angular order; with the origin interior they form the
  // hull cycle and the walk is valid.  Otherwise fall back to a full scan.
  const std::vector<Vec2>& vs = k.vertices();
  const std::size_t h = vs.size();
  bool walkable = h > 0;
  for (const auto& hp : hs) walkable = walkable && hp.offset > 0.0;
  auto pick = [&](Vec2 mid) {
    Vec2 best{0.0, 0.0};
    double val = 0.0;
    for (const auto& v : vs) {
      if (dot(v, mid) > val) {
        val = dot(v, mid);
        best = v;
      }
    }
    return best;
  };
  std::vector<Arc> arcs;
  arcs.reserve(m);
  std::size_t at = 0;
  bool placed = false;
  for (std::size_t i = 0; i < m; ++i) {
    Arc arc;
    arc.start = angle_of(hs[i].normal);
    arc.end = i + 1 < m ? angle_of(hs[i + 1].normal) : angle_of(hs[0].normal) + kTwoPi;
    const Vec2 mid = direction(0.5 * (arc.start + arc.end));
    arc.finite = finite_support(k, mid);
    if (!arc.finite) {
      arcs.push_back(arc);
      continue;
    }
    if (!walkable) {
      arc.vertex = pick(mid);
    } else {
      if (!placed) {
        for (std::size_t j = 1; j < h; ++j) {
          if (dot(vs[j], mid) > dot(vs[at], mid)) at = j;
        }
        placed = true;
      } else {
        for (std::size_t step = 0; step < h; ++step) {
          const std::size_t nxt = (at + 1) % h;
          if (dot(vs[nxt], mid) <= dot(vs[at], mid)) break;
          at = nxt;
        }
      }
      arc.vertex = vs[at];
    }
    arcs.push_back(arc);
  }
  return arcs;
}

const Arc& arc_at(const std::vector<Arc>& arcs, double angle) {
  // arcs[i] covers [start_i, start_{i+1}); the last one wraps past 2 pi.
  auto it = std::upper_bound(arcs.begin(), arcs.end(), angle,
                             [](double a, const Arc& arc) { return a < arc.start; });
  if (it == arcs.begin()) return arcs.back();
  return *(it - 1);
}

double wrap(double a) {
  while (a >= kTwoPi) a -= kTwoPi;
  while (a < 0.0) a += kTwoPi;
  return a;
}

}  // namespace

double one_sided_hausdorff(const ConvexBody2& k, const ConvexBody2& l) {
  for (const auto& w : k.rays()) {
    if (!l.recedes(w)) return kInf;
  }
  if (l.halfplanes().empty()) return 0.0;

  const std::vector<Arc> ka = support_arcs(k);
  const std::vector<Arc> la = support_arcs(l);
  std::vector<double> breaks;
  breaks.reserve(ka.size() + la.size());
  for (const auto& a : ka) breaks.push_back(a.start);
  for (const auto& a : la) breaks.push_back(a.start);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  double best = 0.0;
  const std::size_t nb = breaks.size();
  for (std::size_t i = 0; i < nb; ++i) {
    const double lo = breaks[i];
    const double hi = i + 1 < nb ? breaks[i + 1] : breaks[0] + kTwoPi;
    if (hi - lo <= 1e-15) continue;
    const double mid = wrap(0.5 * (lo + hi));
    const Arc& la_arc = arc_at(la, mid);
    if (!la_arc.finite) continue;
    if (ka.empty()) return kInf;
    const Arc& ka_arc = arc_at(ka, mid);
    if (!ka_arc.finite) return kInf;
    const Vec2 d = ka_arc.vertex - la_arc.vertex;
    double val = std::max(dot(d, direction(lo)), dot(d, direction(hi)));
    const double len = norm(d);
    if (len > 0.0) {
      double crit = angle_of(d);
      while (crit < lo) crit += kTwoPi;
      if (crit < hi) val = len;
    }
    best = std::max(best, val);
  }
  if (!l.is_bounded()) {
    // Directions where s_L is finite but both neighbouring arcs are not.
    for (const double b : breaks) {
      const Vec2 u = direction(b);
      if (!finite_support(l, u)) continue;
      const double sk = support(k, u);
      const double sl = support(l, u);
      if (std::isinf(sk)) return kInf;
      best = std::max(best, sk - sl);
    }
  }
  return best;
}

double hausdorff(const ConvexBody2& k, const ConvexBody2& l) {
  return std::max(one_sided_hausdorff(k, l), one_sided_hausdorff(l, k));
}

bool included(const ConvexBody2& k, const ConvexBody2& l, double tol) {
  return one_sided_hausdorff(k, l) <= tol;
}

double norm(const ConvexBody2& k) {
  if (!k.is_bounded()) return kInf;
  double best = 0.0;
  for (const auto& v : k.vertices()) best = std::max(best, norm(v));
  return best;
}

double inradius_centered(const ConvexBody2& k) {
  double best = kInf;
  for (const auto& h : k.halfplanes()) best = std::min(best, h.offset / norm(h.normal));
  return best;
}

ConvexBody2 regular_polygon(int k, double r, double phase) {
  if (k < 3) throw InvalidParameters("regular polygon needs at least 3 vertices");
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidParameters("regular polygon radius must be positive");
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pts.push_back(r * direction(phase + kTwoPi * i / k));
  return ConvexBody2::from_generators(pts);
}

ConvexBody2 ball_ngon(double r, int n) { return regular_polygon(n, r); }

ConvexBody2 segment(Vec2 p, Vec2 q) {
  check_finite(p, "segment endpoint");
  check_finite(q, "segment endpoint");
  const double scale = std::max(norm(p), norm(q));
  if (scale == 0.0) return ConvexBody2::origin();
  const bool collinear = std::abs(cross(p, q)) <= 1e-12 * norm(p) * norm(q);
  const bool straddles = dot(p, q) <= 1e-12 * scale * scale;
  if (!collinear || !straddles) throw InvalidInput("segment must contain the origin");
  const Vec2 pts[] = {p, q};
  return ConvexBody2::from_generators(pts);
}

ConvexBody2 strip(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidParameters("strip half-width must be positive");
  const Halfplane hs[] = {{{1.0, 0.0}, a}, {{-1.0, 0.0}, a}};
  return ConvexBody2::from_halfplanes(hs);
}

ConvexBody2 halfplane(Vec2 n, double c) {
  const Halfplane hs[] = {{n, c}};
  return ConvexBody2::from_halfplanes(hs);
}

}  // namespace cf
