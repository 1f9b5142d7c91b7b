#include "cf/random.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

namespace cf {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("CF_SEED");
  if (!s || !*s) return fallback;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InvalidInput(std::string("CF_SEED is not an integer: ") + s);
  }
}

ConvexBody2 random_polytope(Rng& rng, int m, double max_offset) {
  if (m < 3) throw InvalidParameters("need at least 3 halfplanes");
  std::uniform_real_distribution<double> jitter(-0.35, 0.35);
  std::uniform_real_distribution<double> off(0.5, max_offset);
  std::vector<Halfplane> hs;
  for (int i = 0; i < m; ++i) {
    const double t = 2.0 * std::numbers::pi * (i + jitter(rng)) / m;
    const Vec2 n{std::round(8.0 * std::cos(t)), std::round(8.0 * std::sin(t))};
    const double len = std::hypot(n.x, n.y);
    const double c = std::ceil(off(rng) * len * 16.0) / 16.0;
    hs.push_back({n / c, 1.0});
  }
  return ConvexBody2::from_halfplanes(hs);
}

namespace {

// One side of a PL function, walking away from 0 in direction dir.
void pl_side(Rng& rng, double dir, double s0, std::vector<std::pair<double, double>>& pts,
             double& tail) {
  std::uniform_real_distribution<double> u(0.05, 1.5);
  std::uniform_int_distribution<int> cnt(1, 5);
  double x = 0.0;
  double y = 0.0;
  double s = s0;
  if (s0 == 0.0) {
    // flat stretch first, so the zero set is an interval
    x = dir * u(rng);
    pts.emplace_back(x, 0.0);
    s = u(rng) * 0.5;
  }
  const int n = cnt(rng);
  for (int i = 0; i < n; ++i) {
    const double dx = u(rng);
    x += dir * dx;
    y += s * dx;
    pts.emplace_back(x, y);
    s += u(rng);
  }
  tail = s;
}

}  // namespace

ConvexFn1 random_pl(Rng& rng, double min_slope, bool allow_flat) {
  std::uniform_real_distribution<double> u(0.05, 0.75);
  std::uniform_int_distribution<int> coin(0, 5);
  auto first_slope = [&] {
    if (min_slope > 0.0) return min_slope + u(rng);
    if (allow_flat && coin(rng) == 0) return 0.0;
    return u(rng);
  };
  std::vector<std::pair<double, double>> right{{0.0, 0.0}};
  std::vector<std::pair<double, double>> left;
  double rt = 0.0;
  double lt = 0.0;
  pl_side(rng, 1.0, first_slope(), right, rt);
  pl_side(rng, -1.0, first_slope(), left, lt);
  std::vector<std::pair<double, double>> pts(left.rbegin(), left.rend());
  pts.insert(pts.end(), right.begin(), right.end());
  // occasionally close the domain at an end point
  if (coin(rng) == 0) rt = kInf;
  if (coin(rng) == 0) lt = kInf;
  return ConvexFn1::pl(pts, -lt, rt);
}

ConvexFn1 random_plq(Rng& rng, double big_r, int pieces_per_side) {
  if (!(big_r >= 1.0)) throw InvalidParameters("curvature bound must be >= 1");
  if (pieces_per_side < 1) throw InvalidParameters("need at least one piece per side");
  std::uniform_real_distribution<double> curv(1.0, big_r);
  std::uniform_real_distribution<double> gap(0.1, 1.5);
  const double a0 = curv(rng);
  // right side
  std::vector<double> rk;
  std::vector<Quad> rq;
  double k = 0.0;
  Quad cur{a0, 0.0, 0.0};
  for (int i = 1; i < pieces_per_side; ++i) {
    k += gap(rng);
    const double v = cur(k);
    const double s = cur.slope(k);
    const double a = curv(rng);
    cur = {a, s - a * k, v - s * k + 0.5 * a * k * k};
    rk.push_back(k);
    rq.push_back(cur);
  }
  std::vector<double> lk;
  std::vector<Quad> lq;
  k = 0.0;
  cur = {a0, 0.0, 0.0};
  for (int i = 1; i < pieces_per_side; ++i) {
    k -= gap(rng);
    const double v = cur(k);
    const double s = cur.slope(k);
    const double a = curv(rng);
    cur = {a, s - a * k, v - s * k + 0.5 * a * k * k};
    lk.push_back(k);
    lq.push_back(cur);
  }
  std::vector<double> knots(lk.rbegin(), lk.rend());
  knots.insert(knots.end(), rk.begin(), rk.end());
  std::vector<Quad> pieces(lq.rbegin(), lq.rend());
  pieces.push_back({a0, 0.0, 0.0});
  pieces.insert(pieces.end(), rq.begin(), rq.end());
  return ConvexFn1::from_pieces(-kInf, kInf, std::move(knots), std::move(pieces));
}

}  // namespace cf
