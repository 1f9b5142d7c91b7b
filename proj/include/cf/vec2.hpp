#pragma once

#include <cmath>
#include <numbers>

namespace cf {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 unit(Vec2 a) { return a / norm(a); }
constexpr Vec2 rotate_ccw(Vec2 a) { return {-a.y, a.x}; }
constexpr Vec2 rotate_cw(Vec2 a) { return {a.y, -a.x}; }

/// Angle of a nonzero vector in [0, 2 pi).
inline double angle_of(Vec2 a) {
  double t = std::atan2(a.y, a.x);
  if (t < 0.0) t += 2.0 * std::numbers::pi;
  if (t >= 2.0 * std::numbers::pi) t -= 2.0 * std::numbers::pi;
  return t;
}

inline Vec2 direction(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace cf
