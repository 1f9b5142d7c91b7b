#pragma once

// Closed convex sets in the plane that contain the origin, possibly
// unbounded or lower dimensional.  Every body carries two synchronized
// descriptions:
//
//   V-rep:  K = conv({0} u vertices) + cone(rays)
//   H-rep:  K = { x : <a_i, x> <= c_i },   c_i in {0, 1}
//
// Halfplanes with positive offset are scaled so that c_i = 1; offset-zero
// halfplanes carry unit normals.  With this normalization the polar is a
// relabelling: vertex v <-> halfplane (v, 1) and ray w <-> halfplane (w, 0),
// so polar(polar(K)) reproduces K bit for bit.

#include <span>
#include <vector>

#include "cf/common.hpp"
#include "cf/vec2.hpp"

namespace cf {

struct Halfplane {
  Vec2 normal;
  double offset = 0.0;  // 0 or 1 in canonical form

  friend bool operator==(const Halfplane&, const Halfplane&) = default;
};

class ConvexBody2 {
 public:
  /// {0}, the neutral element.
  ConvexBody2();

  /// conv({0} u points) + cone(rays), canonicalized.
  static ConvexBody2 from_generators(std::span<const Vec2> points, std::span<const Vec2> rays = {});
  /// Intersection of <n_i, x> <= c_i; every c_i must be >= 0.
  static ConvexBody2 from_halfplanes(std::span<const Halfplane> halfplanes);

  /// Adopts a stored V+H representation verbatim after checking it agrees
  /// with the canonical form of its generators to within tol.
  static ConvexBody2 from_representation(std::vector<Vec2> vertices, std::vector<Vec2> rays,
                                         std::vector<Halfplane> halfplanes, double tol = 1e-9);
  static ConvexBody2 origin() { return {}; }
  static ConvexBody2 whole_plane();

  /// Nonzero generators, ordered by angle.  The origin is always a member
  /// and is never listed.
  const std::vector<Vec2>& vertices() const { return vertices_; }
  /// Extreme recession directions (unit vectors).
  const std::vector<Vec2>& rays() const { return rays_; }
  /// Facets ordered by normal angle in [0, 2 pi).
  const std::vector<Halfplane>& halfplanes() const { return halfplanes_; }

  bool is_bounded() const { return rays_.empty(); }
  bool contains(Vec2 p, double tol = 1e-9) const;
  /// Whether d lies in the recession cone.
  bool recedes(Vec2 d) const;

  friend bool operator==(const ConvexBody2&, const ConvexBody2&) = default;

 private:
  ConvexBody2(std::vector<Vec2> vertices, std::vector<Vec2> rays,
              std::vector<Halfplane> halfplanes);

  friend ConvexBody2 polar(const ConvexBody2& k);
  friend ConvexBody2 scale(double a, const ConvexBody2& k);

  std::vector<Vec2> vertices_;
  std::vector<Vec2> rays_;
  std::vector<Halfplane> halfplanes_;
};

// Operations -----------------------------------------------------------------

/// s_K(u) = sup <u, x>; inf when a ray has positive projection on u.
double support(const ConvexBody2& k, Vec2 u);
/// r_K(u) = sup{t : t u in K}.
double radial(const ConvexBody2& k, Vec2 u);
/// K* = {u : s_K(u) <= 1}.
ConvexBody2 polar(const ConvexBody2& k);
ConvexBody2 minkowski_sum(const ConvexBody2& k, const ConvexBody2& l);
/// conv(K u L).
ConvexBody2 hull_union(const ConvexBody2& k, const ConvexBody2& l);
ConvexBody2 scale(double a, const ConvexBody2& k);

/// inf{e >= 0 : K subset L + e B}, B the Euclidean unit disk.  Computed as the
/// supremum of s_K - s_L over the directions where s_L is finite; each arc
/// between consecutive facet normals is solved in closed form.
double one_sided_hausdorff(const ConvexBody2& k, const ConvexBody2& l);
/// Hausdorff distance; inf when the recession cones differ.
double hausdorff(const ConvexBody2& k, const ConvexBody2& l);
/// K subset L + tol B.
bool included(const ConvexBody2& k, const ConvexBody2& l, double tol = 1e-9);

/// sup{|x| : x in K} = rho_H(K, {0}).
double norm(const ConvexBody2& k);
/// Largest r with r B subset K; inf for the whole plane.
double inradius_centered(const ConvexBody2& k);

// Constructors -----------------------------------------------------------------

/// Regular k-gon with vertices on the circle of radius r, first vertex at angle phase.
ConvexBody2 regular_polygon(int k, double r, double phase = 0.0);
/// Polygonal stand-in for r B: regular n-gon inscribed in the disk of radius r.
ConvexBody2 ball_ngon(double r, int n);
/// [p, q]; must contain the origin.  A zero-length segment is {0}.
ConvexBody2 segment(Vec2 p, Vec2 q);
/// {|x_1| <= a}.
ConvexBody2 strip(double a);
/// {<n, x> <= c}, c >= 0.
ConvexBody2 halfplane(Vec2 n, double c);

}  // namespace cf
