#include <doctest.h>

#include <cmath>
#include <random>

#include "cf/fn1.hpp"

using namespace cf;

namespace {

using Pts = std::vector<std::pair<double, double>>;

// sup_x (x y - f(x)) on a dense grid of f's domain clipped to [-w, w].
double brute_conj(const ConvexFn1& f, double y, double w = 20.0, int n = 200001) {
  double best = -kInf;
  const double lo = std::max(f.lo(), -w);
  const double hi = std::min(f.hi(), w);
  for (int i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    best = std::max(best, x * y - f(x));
  }
  for (const double k : f.knots()) best = std::max(best, k * y - f(k));
  return best;
}

double brute_a(const ConvexFn1& f, double x, double w = 200.0, int n = 400001) {
  double best = -kInf;
  const double lo = std::max(f.lo(), -w);
  const double hi = std::min(f.hi(), w);
  for (int i = 0; i < n; ++i) {
    const double y = lo + (hi - lo) * i / (n - 1);
    const double v = f(y);
    if (v > 0.0) best = std::max(best, (x * y - 1.0) / v);
  }
  for (const double k : f.knots()) {
    if (f(k) > 0.0) best = std::max(best, (x * k - 1.0) / f(k));
  }
  // far tails, where the sup may only be approached
  for (double y = w; y < 1e9; y *= 1.01) {
    for (const double s : {y, -y}) {
      const double v = f(s);
      if (v > 0.0 && std::isfinite(v)) best = std::max(best, (x * s - 1.0) / v);
    }
  }
  return best;
}

ConvexFn1 random_pl(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.5);
  std::uniform_int_distribution<int> cnt(1, 5);
  // slopes increase away from 0 on both sides
  Pts pts{{0.0, 0.0}};
  double x = 0.0;
  double y = 0.0;
  double s = u(rng) * 0.5;
  const int nr = cnt(rng);
  for (int i = 0; i < nr; ++i) {
    const double dx = u(rng);
    x += dx;
    y += s * dx;
    pts.emplace_back(x, y);
    s += u(rng);
  }
  const double right = s;
  x = 0.0;
  y = 0.0;
  s = -u(rng) * 0.5;
  const int nl = cnt(rng);
  Pts left;
  for (int i = 0; i < nl; ++i) {
    const double dx = u(rng);
    x -= dx;
    y -= s * dx;
    left.emplace_back(x, y);
    s -= u(rng);
  }
  pts.insert(pts.begin(), left.rbegin(), left.rend());
  return ConvexFn1::pl(pts, s, right);
}

}  // namespace

TEST_CASE("construction and validation") {
  const Pts bad{{-1, 1}, {0, 0}, {1, 2}, {2, 3}};
  CHECK_THROWS_AS(ConvexFn1::pl(bad, -1, 1), InvalidInput);  // slope drops 2 -> 1
  const Pts off{{-1, 1}, {0, 0.5}, {1, 1}};
  CHECK_THROWS_AS(ConvexFn1::pl(off, -1, 1), InvalidInput);
  const ConvexFn1 a = ConvexFn1::abs();
  CHECK(a(-3) == 3);
  CHECK(a(2) == 2);
  const ConvexFn1 ind = ConvexFn1::indicator(-1, 2);
  CHECK(ind(1.5) == 0);
  CHECK(std::isinf(ind(2.5)));
  CHECK(ConvexFn1().is_zero());
}

TEST_CASE("legendre examples") {
  const ConvexFn1 h = ConvexFn1::quadratic(1.0);
  CHECK(max_abs_diff(legendre(h), h) == 0.0);
  CHECK(max_abs_diff(legendre(ConvexFn1::quadratic(4.0)), ConvexFn1::quadratic(0.25)) < 1e-15);
  const ConvexFn1 ab = legendre(ConvexFn1::abs());
  CHECK(ab.lo() == -1.0);
  CHECK(ab.hi() == 1.0);
  CHECK(ab(0.3) == 0.0);
  CHECK(legendre(ConvexFn1()) == ConvexFn1::indicator(0, 0));
  CHECK(legendre(ConvexFn1::indicator(0, 0)).is_zero());
}

TEST_CASE("legendre against brute force and involution") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    const ConvexFn1 f = random_pl(rng);
    const ConvexFn1 fs = legendre(f);
    for (double y = std::max(fs.lo(), -5.0) + 1e-3; y < std::min(fs.hi(), 5.0); y += 0.37) {
      CHECK(fs(y) == doctest::Approx(brute_conj(f, y)).epsilon(1e-9));
    }
    CHECK(max_abs_diff(legendre(fs), f) < 1e-12);
  }
}

TEST_CASE("inf-convolution") {
  const ConvexFn1 a = ConvexFn1::abs();
  CHECK(max_abs_diff(inf_conv(a, a), a) < 1e-15);
  std::mt19937_64 rng(37);
  const ConvexFn1 f = random_pl(rng);
  CHECK(max_abs_diff(inf_conv(f, ConvexFn1::indicator(0, 0)), f) < 1e-12);
  for (int i = 0; i < 20; ++i) {
    const ConvexFn1 g = random_pl(rng);
    const ConvexFn1 k = random_pl(rng);
    // slope merge agrees with the conjugate route
    CHECK(max_abs_diff(inf_conv(g, k), legendre(add(legendre(g), legendre(k)))) < 1e-9);
  }
  const ConvexFn1 h = ConvexFn1::quadratic(1.0);
  CHECK(max_abs_diff(inf_conv(h, h), ConvexFn1::quadratic(0.5)) < 1e-15);
  // brute force on a PL function
  const ConvexFn1 g = random_pl(rng);
  const ConvexFn1 gg = inf_conv(g, g);
  for (double x = -3; x <= 3; x += 0.5) {
    double best = kInf;
    for (int j = -30000; j <= 30000; ++j) {
      const double x1 = j * 1e-4;
      best = std::min(best, g(x1) + g(x - x1));
    }
    CHECK(gg(x) == doctest::Approx(best).epsilon(1e-6));
  }
}

TEST_CASE("rho_h") {
  const ConvexFn1 h = ConvexFn1::quadratic(1.0);
  CHECK(rho_h(h, ConvexFn1::quadratic(2.0)) == doctest::Approx(1.0));
  CHECK(rho_h(h, h) == 0.0);
  CHECK(std::isinf(rho_h(ConvexFn1::abs(), ConvexFn1())));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    // C^1 PLQ around h; compare against dense sampling
    const double a1 = 1.0 + i * 0.1;
    const Quad right{a1, 0.0, 0.0};
    const double k = 0.7;
    const Quad tail{1.0, (a1 - 1.0) * k, right(k) - 0.5 * k * k - (a1 - 1.0) * k * k};
    const ConvexFn1 f = ConvexFn1::from_pieces(-kInf, kInf, {0.0, k}, {Quad{1.0, 0, 0}, right, tail});
    double sampled = 0.0;
    for (int j = -100000; j <= 100000; ++j) {
      const double x = j * 1e-4;
      if (x == 0.0) continue;
      sampled = std::max(sampled, std::abs(f(x) - h(x)) / (0.5 * x * x));
    }
    const double exact = rho_h(f, h);
    CHECK(exact >= sampled - 1e-9);
    CHECK(exact <= sampled + 1e-3);
  }
}

TEST_CASE("quad bounds") {
  const auto q = quad_bounds(ConvexFn1::quadratic(1.0));
  CHECK(q.r == 1.0);
  CHECK(q.big_r == 1.0);
  const auto a = quad_bounds(ConvexFn1::abs());
  CHECK(a.r == 0.0);
  CHECK(std::isinf(a.big_r));
  // max(x^2/2, x^2 - 1): 2 f / x^2 ranges over [1, 2)
  const double s = std::sqrt(2.0);
  const ConvexFn1 m = ConvexFn1::from_pieces(-kInf, kInf, {-s, s},
                                             {Quad{2, 0, -1}, Quad{1, 0, 0}, Quad{2, 0, -1}});
  const auto mb = quad_bounds(m);
  CHECK(mb.r == doctest::Approx(1.0));
  CHECK(mb.big_r == doctest::Approx(2.0));
}

TEST_CASE("legendre theorem checker") {
  CHECK(c_profile_lf(1.0) == 1.0);
  CHECK(c_profile_lf(kInf) == 2.0);
  CHECK(c_profile_lf(2.0) == doctest::Approx(1.0 + std::sqrt(0.5)));
  CHECK_THROWS_AS(c_profile_lf(0.5), InvalidParameters);
  CHECK(check_legendre_theorem(ConvexFn1::quadratic(2.0)).holds());
  CHECK(check_legendre_theorem(ConvexFn1::quadratic(1.0)).holds());
  CHECK_FALSE(check_legendre_theorem(0.5, 10.0).holds());
  CHECK_FALSE(check_legendre_theorem(ConvexFn1::abs()).holds());
}

TEST_CASE("A-transform examples") {
  const ConvexFn1 a = ConvexFn1::abs();
  CHECK(max_abs_diff(a_transform(a), a) == 0.0);
  const Pts hinge{{0, 0}, {1, 0}};
  const ConvexFn1 f = ConvexFn1::pl(hinge, 0.0, 1.0);  // max(0, x - 1)
  const ConvexFn1 fo = a_transform(f);
  CHECK(fo.lo() == 0.0);
  CHECK(fo.hi() == 1.0);
  CHECK(fo(0.5) == doctest::Approx(0.5));
  CHECK(a_transform(ConvexFn1()) == ConvexFn1::indicator(0, 0));
  CHECK(a_transform(ConvexFn1::indicator(0, 0)).is_zero());
  CHECK_THROWS_AS(a_transform(ConvexFn1::quadratic(1.0)), InvalidInput);
}

TEST_CASE("A-transform against brute force and involution") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 30; ++i) {
    const ConvexFn1 f = random_pl(rng);
    const ConvexFn1 fo = a_transform(f);
    for (double x = -2.0; x <= 2.0; x += 0.31) {
      if (std::isinf(fo(x))) continue;
      CHECK(fo(x) == doctest::Approx(brute_a(f, x)).epsilon(1e-6));
    }
    CHECK(max_abs_diff(a_transform(fo), f) < 1e-9);
  }
}

TEST_CASE("order reversal") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 20; ++i) {
    const ConvexFn1 f = random_pl(rng);
    const ConvexFn1 g = add(f, random_pl(rng));
    REQUIRE(pointwise_leq(f, g));
    CHECK(pointwise_leq(legendre(g), legendre(f), 1e-12));
    CHECK(pointwise_leq(a_transform(g), a_transform(f), 1e-12));
  }
}

TEST_CASE("h_p family") {
  CHECK(hp_constant(1.0) == 1.0);
  CHECK(hp_constant(2.0) == doctest::Approx(0.5));
  CHECK(hp_constant(3.0) == doctest::Approx(std::sqrt(4.0 / 27.0)));
  CHECK_THROWS_AS(hp_constant(0.5), InvalidParameters);
  CHECK(hp_construct(1.0).fn == ConvexFn1::abs());
  const auto h2 = hp_construct(2.0, 64, 4.0);
  CHECK(h2.window_lo == doctest::Approx(0.5));
  CHECK(h2.fn(1.0) == doctest::Approx(0.5));
  CHECK(h2.bound == doctest::Approx(0.5 * (8.0 / 64) * (8.0 / 64) / 4.0));
}

TEST_CASE("A-transform Lipschitz step") {
  const ConvexFn1 h = ConvexFn1::abs();
  CHECK(check_a_xh(multiply(2.0, h), h, 0.5).holds());
  CHECK(check_a_xh(h, h, 0.3).holds());
  CHECK(check_a_xh(multiply(0.5, h), h, 0.3).verdict == Verdict::kNotApplicable);
  std::mt19937_64 rng(53);
  for (int i = 0; i < 20; ++i) {
    const ConvexFn1 f = add(h, random_pl(rng));
    for (const double t : {0.01, 1.0}) CHECK(check_a_xh(f, h, t).holds());
  }
}

TEST_CASE("sampled h_p is an approximate A-transform fixed point") {
  for (const double p : {1.5, 2.0, 3.0}) {
    const auto s = hp_construct(p);
    const double err = window_rel_diff(a_transform(s.fn), s.fn, s.window_lo, s.extent);
    CHECK(err <= 10.0 * s.rel_bound);
  }
}
