#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "simplex/core.hpp"

namespace simplex {

/// Weiszfeld-type update rules.
///   q:       [1/d(P,A_1) : ... : 1/d(P,A_{n+1})]
///   r:       [1/(|p_1| d(P,A_1)^2) : ...], square-root free
///   classic: Cartesian distance-weighted vertex average, converted back
enum class WeiszfeldMethod { q, r, classic };

const char* to_string(WeiszfeldMethod method);
std::optional<WeiszfeldMethod> parse_weiszfeld_method(std::string_view name);

/// P # Z* = [p_1/z_1 : ... : p_{n+1}/z_{n+1}]. Throws ZeroCoordinate.
BarycentricPoint z_correspondent(const BarycentricPoint& p, const BarycentricPoint& z_star);

/// P # I* = [sgn(p_1)/d(P,A_1) : ...], the correspondent of the incenter of
/// the polar simplex. Throws AtVertex.
BarycentricPoint incenter_correspondent(const BarycentricPoint& p, const SimplexModel& model);

/// Throws AtVertex.
BarycentricPoint weiszfeld_step_q(const BarycentricPoint& p, const SimplexModel& model);
/// Uses the current iterate's coordinates. Throws AtVertex, ZeroCoordinate.
BarycentricPoint weiszfeld_step_r(const BarycentricPoint& p, const SimplexModel& model);
/// Throws AtVertex.
BarycentricPoint weiszfeld_step_classic(const BarycentricPoint& p, const SimplexModel& model);

/// sum_i d(P, A_i), distances from barycentric coordinates.
double total_distance(const BarycentricPoint& p, const SimplexModel& model);

/// Cartesian gradient sum_i (x - A_i)/|x - A_i| of the total distance.
Vector total_distance_gradient(const Vector& x, const SimplexModel& model);

/// |sum_{i != k} (A_k - A_i)/d_ik|. Vertex A_k minimizes the total distance
/// iff this is at most 1.
double vertex_optimality_norm(const SimplexModel& model, int k);

struct IterationTrace {
  WeiszfeldMethod method = WeiszfeldMethod::q;
  /// Normalized coordinates, starting point first.
  std::vector<Vector> iterates;
  std::vector<double> objective_values;
  bool converged = false;
  int iterations_used = 0;
};

struct FermatOptions {
  WeiszfeldMethod method = WeiszfeldMethod::q;
  double tolerance = 1e-12;
  int max_iterations = 10000;
};

struct FermatResult {
  BarycentricPoint point;
  IterationTrace trace;
  /// Set when the minimizer is the vertex with this index.
  std::optional<int> vertex;
};

/// Minimizer of P -> sum_i d(P, A_i) by Weiszfeld-type iteration from start.
/// Start coordinates must all be nonzero (ZeroCoordinate otherwise). Hitting
/// max_iterations is reported through trace.converged == false; the trace is
/// returned either way.
FermatResult fermat_point(const SimplexModel& model, const BarycentricPoint& start,
                          const FermatOptions& options = {});

}  // namespace simplex
