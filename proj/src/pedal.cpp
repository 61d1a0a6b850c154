#include "simplex/pedal.hpp"

#include <cmath>

namespace simplex {

namespace {

std::optional<SimplexModel> try_model(const std::vector<Vector>& points) {
  try {
    return SimplexModel::from_vertices(points);
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

PedalResult make_result(PedalKind kind, std::vector<Vector> points, Vector source) {
  PedalResult r;
  r.kind = kind;
  r.simplex = try_model(points);
  r.points = std::move(points);
  r.source = std::move(source);
  return r;
}

}  // namespace

Vector PedalResult::facet_volumes() const {
  return simplex ? simplex->facet_volumes() : facet_volumes_of(points);
}

PedalResult pedal_simplex(const BarycentricPoint& p, const SimplexModel& model) {
  const Vector x = model.bary_to_cart(p);
  std::vector<Vector> feet;
  feet.reserve(static_cast<std::size_t>(model.vertex_count()));
  for (int i = 0; i < model.vertex_count(); ++i) {
    const Hyperplane& h = model.facet_plane(i);
    feet.push_back(x - h.signed_distance(x) * h.normal);
  }
  return make_result(PedalKind::pedal, std::move(feet), x);
}

PedalResult antipedal_simplex(const BarycentricPoint& p, const SimplexModel& model) {
  const Vector x = model.bary_to_cart(p);
  const int n = model.dimension();
  std::vector<Vector> vertices;
  vertices.reserve(static_cast<std::size_t>(n + 1));
  Matrix lhs(n, n);
  Vector rhs(n);
  for (int k = 0; k <= n; ++k) {
    int row = 0;
    for (int i = 0; i <= n; ++i) {
      if (i == k) continue;
      const Vector u = model.vertex(i) - x;
      lhs.row(row) = u.transpose();
      rhs(row) = u.dot(model.vertex(i));
      ++row;
    }
    Eigen::FullPivLU<Matrix> lu(lhs);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible())
      throw GeometryError(ErrorCode::UnboundedAntipedal,
                          "bounding hyperplanes opposite vertex " + std::to_string(k + 1) +
                              " do not meet in a point");
    vertices.push_back(lu.solve(rhs));
  }
  return make_result(PedalKind::antipedal, std::move(vertices), x);
}

PedalResult polar_simplex(const BarycentricPoint& p, double radius, const SimplexModel& model) {
  if (!(radius > 0.0)) throw GeometryError(ErrorCode::InvalidArgument, "radius must be positive");
  if (p.has_zero_coordinate(1e-14))
    throw GeometryError(ErrorCode::OnSideplane, "point lies on a sideplane");
  const Vector x = model.bary_to_cart(p);
  std::vector<Vector> poles;
  poles.reserve(static_cast<std::size_t>(model.vertex_count()));
  for (int i = 0; i < model.vertex_count(); ++i) {
    const Hyperplane& h = model.facet_plane(i);
    const Vector to_foot = -h.signed_distance(x) * h.normal;
    // pole of the sideplane lies on the ray toward its foot at distance r^2 / delta
    poles.push_back(x + (radius * radius / to_foot.squaredNorm()) * to_foot);
  }
  return make_result(PedalKind::polar, std::move(poles), x);
}

PedalResult inversive_image(const SimplexModel& model, const Vector& center, double radius) {
  if (!(radius > 0.0)) throw GeometryError(ErrorCode::InvalidArgument, "radius must be positive");
  std::vector<Vector> images;
  images.reserve(static_cast<std::size_t>(model.vertex_count()));
  for (const auto& v : model.vertices()) {
    const Vector offset = v - center;
    const double d2 = offset.squaredNorm();
    if (d2 <= 1e-28 * model.diameter() * model.diameter())
      throw GeometryError(ErrorCode::CenterAtVertex, "inversion center coincides with a vertex");
    images.push_back(center + (radius * radius / d2) * offset);
  }
  return make_result(PedalKind::inversive, std::move(images), center);
}

double equiareal_deviation(const Vector& facet_volumes) {
  return (facet_volumes.maxCoeff() - facet_volumes.minCoeff()) / facet_volumes.mean();
}

double equiareal_deviation(const SimplexModel& model) {
  return equiareal_deviation(model.facet_volumes());
}

double equiareal_deviation(const PedalResult& result) {
  return equiareal_deviation(result.facet_volumes());
}

}  // namespace simplex
