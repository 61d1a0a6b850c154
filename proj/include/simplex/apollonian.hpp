#pragma once

#include <string>
#include <vector>

#include "simplex/core.hpp"

namespace simplex {

/// Generalized Apollonian sphere S_ij of a simplex with respect to P: the
/// locus of points R with d(A_i,R) |p_i| = d(A_j,R) |p_j|. Its diameter is
/// the segment between P_ij = [p_i : p_j] and P_ij* = [-p_i : p_j] on the
/// line A_i A_j; its center is Q_ij = [-p_i^2 : p_j^2]. When |p_i| = |p_j| the
/// sphere degenerates to the perpendicular bisector of A_i A_j.
struct ApollonianSphere {
  int i = 0;
  int j = 0;
  BarycentricPoint p_ij;
  BarycentricPoint p_ij_star;
  BarycentricPoint center_bary;
  Sphere sphere;
};

/// Throws ZeroCoordinate when p_i or p_j vanishes.
ApollonianSphere apollonian_sphere(const BarycentricPoint& p, int i, int j,
                                   const SimplexModel& model);

/// Relative defect |d(A_i,x)|p_i| - d(A_j,x)|p_j|| / max(...) of a Cartesian
/// point against the locus condition of S_ij.
double apollonian_membership_residual(const Vector& x, const BarycentricPoint& p, int i, int j,
                                      const SimplexModel& model);

/// Max membership residual over all C(n+1,2) spheres.
double apollonian_max_residual(const Vector& x, const BarycentricPoint& p,
                               const SimplexModel& model);

struct IsodynamicResult {
  /// Ordered by distance from the circumcenter, the point inside the
  /// circumsphere first.
  std::vector<BarycentricPoint> points;
  Vector axis_point;
  Vector axis_direction;
  /// Per point, max deviation over all sphere memberships.
  std::vector<double> residuals;
  std::vector<std::string> notes;
};

/// Common points of all Apollonian spheres with respect to P (the generalized
/// isodynamic points). They lie on the line through the circumcenter
/// perpendicular to the Sigma-polar plane of P^2; the line is intersected with
/// one nondegenerate sphere and the hits are validated against all others.
/// When all |p_i| are equal every sphere is a bisector hyperplane and the
/// only common point is the circumcenter. Throws ZeroCoordinate.
IsodynamicResult isodynamic_points(const BarycentricPoint& p, const SimplexModel& model);

struct YiuResult {
  BarycentricPoint q;
  bool outside = false;
  /// d^2(Q, O) of the triangle; +inf when Q is at infinity.
  double distance_sq = 0.0;
  double circumradius_sq = 0.0;
  BarycentricPoint circumcenter;
};

/// Criterion for a triangle with sides (d23, d13, d12) and weights a_i:
/// the Apollonian circles of the triangle with respect to [a_1 : a_2 : a_3]
/// have no common point iff Q lies outside the circumcircle.
/// Throws NotATriangle.
YiuResult yiu_triangle_test(double d23, double d13, double d12, double a1, double a2, double a3);

struct FacetRestriction {
  SimplexModel facet;
  /// Vertex indices of the parent simplex spanning the facet.
  std::vector<int> vertex_indices;
  /// Intersection of (opposite vertex) v P with the facet, in facet coordinates.
  BarycentricPoint point;
};

/// Throws ParallelLine when the line from the opposite vertex through P does
/// not meet the facet's sideplane.
FacetRestriction restrict_to_facet(const BarycentricPoint& p, const SimplexModel& model,
                                   int facet_index);

/// Cross-ratio (A,B;C,D) of four collinear Cartesian points.
double cross_ratio(const Vector& a, const Vector& b, const Vector& c, const Vector& d);

}  // namespace simplex
