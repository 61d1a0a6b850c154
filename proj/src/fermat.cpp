#include "simplex/fermat.hpp"

#include <cmath>
#include <string>

namespace simplex {

namespace {

constexpr double kVertexProximity = 1e-13;
constexpr double kVertexApproach = 1e-6;

void check_size(const BarycentricPoint& p, const SimplexModel& model) {
  if (p.size() != model.vertex_count())
    throw GeometryError(ErrorCode::InvalidArgument, "coordinate count must match vertex count");
}

// d(P, A_i) for every vertex from the barycentric distance formula.
Vector vertex_distances(const BarycentricPoint& p, const SimplexModel& model) {
  check_size(p, model);
  const int count = model.vertex_count();
  Vector out(count);
  for (int i = 0; i < count; ++i)
    out(i) = distance(p, BarycentricPoint::vertex(count, i), model);
  return out;
}

Vector checked_distances(const BarycentricPoint& p, const SimplexModel& model) {
  Vector d = vertex_distances(p, model);
  if (d.minCoeff() <= kVertexProximity * model.diameter())
    throw GeometryError(ErrorCode::AtVertex, "point coincides with a vertex");
  return d;
}

int nearest_vertex(const Vector& x, const SimplexModel& model, double& dist) {
  int best = 0;
  dist = (x - model.vertex(0)).norm();
  for (int i = 1; i < model.vertex_count(); ++i) {
    const double d = (x - model.vertex(i)).norm();
    if (d < dist) {
      dist = d;
      best = i;
    }
  }
  return best;
}

BarycentricPoint apply_step(WeiszfeldMethod method, const BarycentricPoint& p,
                            const SimplexModel& model) {
  switch (method) {
    case WeiszfeldMethod::q: return weiszfeld_step_q(p, model);
    case WeiszfeldMethod::r: return weiszfeld_step_r(p, model);
    case WeiszfeldMethod::classic: return weiszfeld_step_classic(p, model);
  }
  return weiszfeld_step_q(p, model);
}

}  // namespace

const char* to_string(WeiszfeldMethod method) {
  switch (method) {
    case WeiszfeldMethod::q: return "q";
    case WeiszfeldMethod::r: return "r";
    case WeiszfeldMethod::classic: return "classic";
  }
  return "q";
}

std::optional<WeiszfeldMethod> parse_weiszfeld_method(std::string_view name) {
  if (name == "q" || name == "Q") return WeiszfeldMethod::q;
  if (name == "r" || name == "R") return WeiszfeldMethod::r;
  if (name == "classic") return WeiszfeldMethod::classic;
  return std::nullopt;
}

BarycentricPoint z_correspondent(const BarycentricPoint& p, const BarycentricPoint& z_star) {
  if (p.size() != z_star.size())
    throw GeometryError(ErrorCode::InvalidArgument, "point sizes differ");
  if (p.has_zero_coordinate() || z_star.has_zero_coordinate())
    throw GeometryError(ErrorCode::ZeroCoordinate, "correspondence needs nonzero coordinates");
  return BarycentricPoint::homogeneous(p.coords().cwiseQuotient(z_star.coords()));
}

BarycentricPoint incenter_correspondent(const BarycentricPoint& p, const SimplexModel& model) {
  const Vector d = checked_distances(p, model);
  const Vector c = p.normalized_coords();
  Vector out(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) out(i) = (c(i) < 0.0 ? -1.0 : 1.0) / d(i);
  return BarycentricPoint::homogeneous(std::move(out));
}

BarycentricPoint weiszfeld_step_q(const BarycentricPoint& p, const SimplexModel& model) {
  return BarycentricPoint::normalized(checked_distances(p, model).cwiseInverse());
}

BarycentricPoint weiszfeld_step_r(const BarycentricPoint& p, const SimplexModel& model) {
  const Vector d = checked_distances(p, model);
  const Vector c = p.normalized_coords();
  if (p.has_zero_coordinate())
    throw GeometryError(ErrorCode::ZeroCoordinate, "R step needs nonzero coordinates");
  Vector out(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) out(i) = 1.0 / (std::abs(c(i)) * d(i) * d(i));
  return BarycentricPoint::normalized(std::move(out));
}

BarycentricPoint weiszfeld_step_classic(const BarycentricPoint& p, const SimplexModel& model) {
  check_size(p, model);
  const Vector x = model.bary_to_cart(p);
  Vector num = Vector::Zero(model.dimension());
  double den = 0.0;
  for (const auto& v : model.vertices()) {
    const double d = (x - v).norm();
    if (d <= kVertexProximity * model.diameter())
      throw GeometryError(ErrorCode::AtVertex, "point coincides with a vertex");
    num += v / d;
    den += 1.0 / d;
  }
  return model.cart_to_bary(num / den);
}

double total_distance(const BarycentricPoint& p, const SimplexModel& model) {
  return vertex_distances(p, model).sum();
}

Vector total_distance_gradient(const Vector& x, const SimplexModel& model) {
  Vector g = Vector::Zero(model.dimension());
  for (const auto& v : model.vertices()) g += (x - v).normalized();
  return g;
}

double vertex_optimality_norm(const SimplexModel& model, int k) {
  Vector r = Vector::Zero(model.dimension());
  for (int i = 0; i < model.vertex_count(); ++i)
    if (i != k) r += (model.vertex(k) - model.vertex(i)).normalized();
  return r.norm();
}

FermatResult fermat_point(const SimplexModel& model, const BarycentricPoint& start,
                          const FermatOptions& options) {
  check_size(start, model);
  if (start.has_zero_coordinate())
    throw GeometryError(ErrorCode::ZeroCoordinate, "start point needs all coordinates nonzero");

  FermatResult result{start.as_normalized(), IterationTrace{}, std::nullopt};
  IterationTrace& trace = result.trace;
  trace.method = options.method;

  BarycentricPoint current = result.point;
  auto record = [&](const BarycentricPoint& p) {
    trace.iterates.push_back(p.normalized_coords());
    trace.objective_values.push_back(total_distance(p, model));
  };
  auto snap_to_vertex = [&](int k) {
    result.vertex = k;
    current = BarycentricPoint::vertex(model.vertex_count(), k);
    record(current);
    trace.converged = true;
  };
  record(current);

  const double diameter = model.diameter();
  for (int it = 1; it <= options.max_iterations; ++it) {
    trace.iterations_used = it;

    double near_dist = 0.0;
    const int near = nearest_vertex(model.bary_to_cart(current), model, near_dist);
    if (near_dist < kVertexProximity * diameter) {
      if (vertex_optimality_norm(model, near) <= 1.0) {
        snap_to_vertex(near);
        break;
      }
      // Stuck at a non-optimal vertex: leave along the steepest descent ray.
      Vector pull = Vector::Zero(model.dimension());
      for (int i = 0; i < model.vertex_count(); ++i)
        if (i != near) pull += (model.vertex(near) - model.vertex(i)).normalized();
      current = model.cart_to_bary(model.vertex(near) - 1e-6 * diameter * pull.normalized());
    }

    const BarycentricPoint next = apply_step(options.method, current, model);
    const double delta = (next.normalized_coords() - current.normalized_coords()).cwiseAbs().maxCoeff();
    current = next;
    record(current);

    Eigen::Index top = 0;
    const double top_coord = current.normalized_coords().maxCoeff(&top);
    if (top_coord > 1.0 - kVertexApproach &&
        vertex_optimality_norm(model, static_cast<int>(top)) <= 1.0) {
      snap_to_vertex(static_cast<int>(top));
      break;
    }
    if (delta < options.tolerance) {
      trace.converged = true;
      break;
    }
  }
  result.point = current;
  return result;
}

}  // namespace simplex
