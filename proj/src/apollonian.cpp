#include "simplex/apollonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace simplex {

namespace {

// |p_i| and |p_j| closer than this (relative) give a bisector hyperplane.
constexpr double kEqualMagnitude = 1e-12;
// Discriminants within this fraction of R^2 count as tangency.
constexpr double kTangency = 1e-12;

bool equal_magnitude(double a, double b) {
  return std::abs(std::abs(a) - std::abs(b)) <= kEqualMagnitude * std::max(std::abs(a), std::abs(b));
}

Vector pair_vector(int size, int i, double vi, int j, double vj) {
  Vector c = Vector::Zero(size);
  c(i) = vi;
  c(j) = vj;
  return c;
}

}  // namespace

ApollonianSphere apollonian_sphere(const BarycentricPoint& p, int i, int j,
                                   const SimplexModel& model) {
  const int count = model.vertex_count();
  if (p.size() != count || i < 0 || j < 0 || i >= count || j >= count || i == j)
    throw GeometryError(ErrorCode::InvalidArgument, "invalid sphere indices");
  const double pi = p[i];
  const double pj = p[j];
  if (pi == 0.0 || pj == 0.0)
    throw GeometryError(ErrorCode::ZeroCoordinate, "Apollonian sphere needs p_i, p_j != 0");

  ApollonianSphere s{
      i,
      j,
      BarycentricPoint::homogeneous(pair_vector(count, i, pi, j, pj)),
      BarycentricPoint::homogeneous(pair_vector(count, i, -pi, j, pj)),
      BarycentricPoint::homogeneous(pair_vector(count, i, -pi * pi, j, pj * pj)),
      Sphere{},
  };

  const Vector& ai = model.vertex(i);
  const Vector& aj = model.vertex(j);
  if (equal_magnitude(pi, pj)) {
    const Vector midpoint = 0.5 * (ai + aj);
    const Vector normal = aj - ai;
    s.sphere.center = midpoint;
    s.sphere.radius = std::numeric_limits<double>::infinity();
    s.sphere.degenerate_hyperplane = Hyperplane::from_cartesian(normal, normal.dot(midpoint), model);
    return s;
  }
  const double wi = pi * pi;
  const double wj = pj * pj;
  s.sphere.center = (wj * aj - wi * ai) / (wj - wi);
  s.sphere.radius = std::abs(pi * pj) * model.edges()(i, j) / std::abs(wj - wi);
  return s;
}

double apollonian_membership_residual(const Vector& x, const BarycentricPoint& p, int i, int j,
                                      const SimplexModel& model) {
  const double lhs = (x - model.vertex(i)).norm() * std::abs(p[i]);
  const double rhs = (x - model.vertex(j)).norm() * std::abs(p[j]);
  const double scale = std::max(lhs, rhs);
  return scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
}

double apollonian_max_residual(const Vector& x, const BarycentricPoint& p,
                               const SimplexModel& model) {
  double worst = 0.0;
  for (int i = 0; i < model.vertex_count(); ++i)
    for (int j = i + 1; j < model.vertex_count(); ++j)
      worst = std::max(worst, apollonian_membership_residual(x, p, i, j, model));
  return worst;
}

IsodynamicResult isodynamic_points(const BarycentricPoint& p, const SimplexModel& model) {
  if (p.size() != model.vertex_count())
    throw GeometryError(ErrorCode::InvalidArgument, "coordinate count must match vertex count");
  if (p.has_zero_coordinate())
    throw GeometryError(ErrorCode::ZeroCoordinate, "isodynamic points need all p_i != 0");

  const Sphere circ = circumsphere(model);
  IsodynamicResult result;
  result.axis_point = circ.center;

  int pair_i = -1;
  int pair_j = -1;
  for (int i = 0; i < model.vertex_count() && pair_i < 0; ++i)
    for (int j = i + 1; j < model.vertex_count(); ++j)
      if (!equal_magnitude(p[i], p[j])) {
        pair_i = i;
        pair_j = j;
        break;
      }

  if (pair_i < 0) {
    // every S_ij is the bisector of A_i A_j; they share only the circumcenter
    result.axis_direction = Vector::Zero(model.dimension());
    result.points.push_back(model.cart_to_bary(circ.center));
    result.residuals.push_back(apollonian_max_residual(circ.center, p, model));
    result.notes.emplace_back(
        "all |p_i| equal: spheres are bisector hyperplanes; the circumcenter is the single "
        "common point and the second isodynamic point is at infinity");
    return result;
  }

  const Hyperplane polar = sigma_polar_plane(barycentric_square(p), model);
  const Vector& u = polar.normal;
  result.axis_direction = u;

  const ApollonianSphere s = apollonian_sphere(p, pair_i, pair_j, model);
  const Vector offset = circ.center - s.sphere.center;
  const double b = u.dot(offset);
  const double c = offset.squaredNorm() - s.sphere.radius * s.sphere.radius;
  const double disc = b * b - c;
  const double r2 = circ.radius * circ.radius;

  std::vector<double> params;
  if (disc < -kTangency * r2) {
    result.notes.emplace_back("the axis misses the Apollonian spheres: no isodynamic points exist");
    return result;
  }
  if (disc <= kTangency * r2) {
    params.push_back(-b);
    result.notes.emplace_back("axis tangent to the spheres: single isodynamic point on the circumsphere");
  } else {
    const double root = std::sqrt(disc);
    // stable pair: t1 t2 = c
    const double big = b >= 0.0 ? -b - root : -b + root;
    params.push_back(big);
    params.push_back(c / big);
  }
  std::sort(params.begin(), params.end(),
            [](double x, double y) { return std::abs(x) < std::abs(y); });
  for (double t : params) {
    const Vector x = circ.center + t * u;
    result.points.push_back(model.cart_to_bary(x));
    result.residuals.push_back(apollonian_max_residual(x, p, model));
  }
  return result;
}

YiuResult yiu_triangle_test(double d23, double d13, double d12, double a1, double a2, double a3) {
  for (double v : {d23, d13, d12, a1, a2, a3})
    if (!(v > 0.0) || !std::isfinite(v))
      throw GeometryError(ErrorCode::NotATriangle, "lengths and weights must be positive");
  const std::vector<double> sides{d12, d13, d23};
  SimplexModel tri = [&] {
    try {
      return embed_from_edge_lengths(EdgeLengthTable::from_pairs(2, sides));
    } catch (const GeometryError& e) {
      throw GeometryError(ErrorCode::NotATriangle, e.what());
    }
  }();

  const double s1 = d23 * d23 / (a1 * a1);
  const double s2 = d13 * d13 / (a2 * a2);
  const double s3 = d12 * d12 / (a3 * a3);
  Vector q(3);
  q << d23 * d23 * (s1 - s2 - s3), d13 * d13 * (s2 - s3 - s1), d12 * d12 * (s3 - s1 - s2);

  const Sphere circ = circumsphere(tri);
  YiuResult r{
      BarycentricPoint::homogeneous(q),
      true,
      std::numeric_limits<double>::infinity(),
      circ.radius * circ.radius,
      tri.cart_to_bary(circ.center),
  };
  if (r.q.is_finite()) {
    r.q = r.q.as_normalized();
    r.distance_sq = squared_distance(r.q, r.circumcenter, tri);
    r.outside = r.distance_sq > r.circumradius_sq;
  }
  return r;
}

FacetRestriction restrict_to_facet(const BarycentricPoint& p, const SimplexModel& model,
                                   int facet_index) {
  const int count = model.vertex_count();
  if (facet_index < 0 || facet_index >= count || p.size() != count)
    throw GeometryError(ErrorCode::InvalidArgument, "invalid facet index");
  const Vector c = p.normalized_coords();
  std::vector<int> indices;
  Vector rest(count - 1);
  for (int k = 0, r = 0; k < count; ++k) {
    if (k == facet_index) continue;
    indices.push_back(k);
    rest(r++) = c(k);
  }
  const double sum = rest.sum();
  if (std::abs(sum) <= 1e-14 * std::max(1.0, c.cwiseAbs().maxCoeff()))
    throw GeometryError(ErrorCode::ParallelLine, "line through the opposite vertex misses the facet");
  return FacetRestriction{
      embed_from_edge_lengths(model.edges().sub_table(indices)),
      indices,
      BarycentricPoint::normalized(rest / sum),
  };
}

double cross_ratio(const Vector& a, const Vector& b, const Vector& c, const Vector& d) {
  const Vector dir = (b - a).normalized();
  const double ta = 0.0;
  const double tb = dir.dot(b - a);
  const double tc = dir.dot(c - a);
  const double td = dir.dot(d - a);
  return ((tc - ta) * (td - tb)) / ((tc - tb) * (td - ta));
}

}  // namespace simplex
