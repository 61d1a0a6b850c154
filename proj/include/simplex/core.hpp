#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "simplex/errors.hpp"

namespace simplex {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Default equality tolerance in normalized barycentric units.
inline constexpr double kDefaultTolerance = 1e-10;

/// Symmetric table of pairwise vertex distances d_ij of an n-simplex.
///
/// Holds n+1 vertices. Construction checks symmetry, a zero diagonal and
/// strictly positive off-diagonal entries; embeddability is checked by
/// embed_from_edge_lengths().
class EdgeLengthTable {
 public:
  explicit EdgeLengthTable(Matrix distances);

  /// Builds a table from the lexicographic pair list (d_12, d_13, ..., d_{n,n+1}).
  static EdgeLengthTable from_pairs(int dimension, std::span<const double> values);

  int dimension() const { return static_cast<int>(d_.rows()) - 1; }
  int vertex_count() const { return static_cast<int>(d_.rows()); }
  double operator()(int i, int j) const { return d_(i, j); }
  const Matrix& matrix() const { return d_; }

  /// Values in lexicographic pair order, the inverse of from_pairs().
  std::vector<double> pair_values() const;

  /// Table restricted to the given vertex indices, in the order given.
  EdgeLengthTable sub_table(std::span<const int> indices) const;

 private:
  Matrix d_;
};

/// Squared k-volume of the simplex spanned by a table of k+1 vertices, via
/// the Cayley-Menger determinant. Negative results mean the distances are
/// not realizable in Euclidean space.
double cayley_menger_squared_volume(const EdgeLengthTable& table);

/// Coordinates of a point relative to a simplex.
///
/// Homogeneous points are defined up to a nonzero scale. A homogeneous vector
/// with coordinate sum zero is a direction (a point at infinity); it can be
/// stored but metric operations reject it with PointAtInfinity.
class BarycentricPoint {
 public:
  enum class Mode { homogeneous, normalized };

  static BarycentricPoint homogeneous(Vector coords);
  /// Scales coords so they sum to one. Throws PointAtInfinity.
  static BarycentricPoint normalized(Vector coords);
  /// The vertex A_{index+1} of a simplex with vertex_count vertices.
  static BarycentricPoint vertex(int vertex_count, int index);
  static BarycentricPoint centroid(int vertex_count);

  const Vector& coords() const { return coords_; }
  Mode mode() const { return mode_; }
  int size() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_(i); }

  bool is_finite() const;
  /// Coordinates scaled to sum one. Throws PointAtInfinity.
  Vector normalized_coords() const;
  BarycentricPoint as_normalized() const { return normalized(coords_); }
  /// Homogeneous rendering scaled so the largest-magnitude coordinate is +1.
  Vector display_coords() const;
  bool has_zero_coordinate(double eps = 0.0) const;

 private:
  BarycentricPoint(Vector coords, Mode mode) : coords_(std::move(coords)), mode_(mode) {}

  Vector coords_;
  Mode mode_;
};

/// Componentwise square [p_1^2 : ... : p_{n+1}^2].
BarycentricPoint barycentric_square(const BarycentricPoint& p);

/// Max per-coordinate difference between the normalized forms of two points.
double normalized_distance(const BarycentricPoint& a, const BarycentricPoint& b);

class SimplexModel;

/// Hyperplane {x : sum c_i x_i = 0} in barycentric form, together with the
/// equivalent Cartesian form normal . x = offset (unit normal).
struct Hyperplane {
  Vector bary_coeffs;
  Vector normal;
  double offset = 0.0;

  /// Throws AtInfinity when all coefficients are equal.
  static Hyperplane from_bary(Vector coeffs, const SimplexModel& model);
  /// From a (not necessarily unit) normal and offset: normal . x = offset.
  static Hyperplane from_cartesian(const Vector& normal, double offset, const SimplexModel& model);

  double signed_distance(const Vector& x) const { return normal.dot(x) - offset; }
  /// Value of sum c_i x_i on the normalized coordinates of p.
  double evaluate(const BarycentricPoint& p) const;
};

/// A sphere, or the hyperplane it degenerates to (infinite radius).
struct Sphere {
  Vector center;
  double radius = 0.0;
  std::optional<Hyperplane> degenerate_hyperplane;

  bool is_degenerate() const { return degenerate_hyperplane.has_value(); }
};

/// An n-simplex embedded in R^n with cached metric data.
class SimplexModel {
 public:
  /// Throws InvalidArgument on shape mismatch, Degenerate when the vertices
  /// are affinely dependent.
  static SimplexModel from_vertices(std::vector<Vector> vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Vector>& vertices() const { return vertices_; }
  const Vector& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  const EdgeLengthTable& edges() const { return edges_; }
  /// a_i = (n-1)-volume of the facet opposite A_i.
  const Vector& facet_volumes() const { return facet_volumes_; }
  double volume() const { return volume_; }
  /// Longest edge.
  double diameter() const { return diameter_; }

  Vector bary_to_cart(const BarycentricPoint& p) const;
  BarycentricPoint cart_to_bary(const Vector& x) const;
  /// Facet hyperplane opposite A_i (x_i = 0), normal pointing out of the simplex.
  const Hyperplane& facet_plane(int i) const { return facet_planes_[static_cast<std::size_t>(i)]; }

 private:
  SimplexModel(std::vector<Vector> vertices, EdgeLengthTable edges);

  std::vector<Vector> vertices_;
  EdgeLengthTable edges_;
  Vector facet_volumes_;
  double volume_ = 0.0;
  double diameter_ = 0.0;
  Eigen::PartialPivLU<Matrix> affine_lu_;
  std::vector<Hyperplane> facet_planes_;
};

/// Realizes an edge-length table in canonical pose: A_1 at the origin, A_2 on
/// the first axis, and every later vertex with a positive last nonzero
/// coordinate. Throws NotEmbeddable or Degenerate.
SimplexModel embed_from_edge_lengths(const EdgeLengthTable& table);

/// Squared distance from barycentric coordinates alone:
/// d^2(P,Q) = -sum_{i<j} d_ij^2 (p_i - q_i)(p_j - q_j) on normalized coordinates.
double squared_distance(const BarycentricPoint& p, const BarycentricPoint& q,
                        const SimplexModel& model);
double distance(const BarycentricPoint& p, const BarycentricPoint& q,
                const SimplexModel& model);

inline Vector bary_to_cart(const BarycentricPoint& p, const SimplexModel& model) {
  return model.bary_to_cart(p);
}
inline BarycentricPoint cart_to_bary(const Vector& x, const SimplexModel& model) {
  return model.cart_to_bary(x);
}
inline const Vector& facet_volumes(const SimplexModel& model) { return model.facet_volumes(); }

/// (n-1)-volumes of the facets of an arbitrary point set of n+1 points in
/// R^n, via Gram determinants. Unlike SimplexModel this accepts degenerate
/// configurations.
Vector facet_volumes_of(const std::vector<Vector>& points);
/// k-volume of k+1 points (any ambient dimension) via the Gram determinant.
double simplex_volume(const std::vector<Vector>& points);

struct ClassicalCenters {
  BarycentricPoint centroid;
  BarycentricPoint incenter;
  BarycentricPoint symmedian;
  BarycentricPoint circumcenter;
};

ClassicalCenters classical_centers(const SimplexModel& model);

/// Sigma-polar plane {x : sum x_i / p_i = 0}. Throws OnSideplane when some
/// p_i = 0 and AtInfinity when all 1/p_i are equal.
Hyperplane sigma_polar_plane(const BarycentricPoint& p, const SimplexModel& model);

Sphere circumsphere(const SimplexModel& model);

}  // namespace simplex
