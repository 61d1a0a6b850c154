#include "simplex/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace simplex {

namespace {

// Relative size of a coordinate sum below which a homogeneous vector is
// treated as a point at infinity.
constexpr double kInfinityEps = 1e-13;
// Relative squared-pivot size below which a Gram factorization is degenerate.
constexpr double kDegeneratePivot = 1e-12;

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw GeometryError(code, what);
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotEmbeddable: return "NotEmbeddable";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::OnSideplane: return "OnSideplane";
    case ErrorCode::AtInfinity: return "AtInfinity";
    case ErrorCode::UnboundedAntipedal: return "UnboundedAntipedal";
    case ErrorCode::CenterAtVertex: return "CenterAtVertex";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::AxisUndefined: return "AxisUndefined";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::ParallelLine: return "ParallelLine";
    case ErrorCode::AtVertex: return "AtVertex";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// EdgeLengthTable

EdgeLengthTable::EdgeLengthTable(Matrix distances) : d_(std::move(distances)) {
  require(d_.rows() == d_.cols(), ErrorCode::InvalidArgument, "edge table must be square");
  require(d_.rows() >= 2, ErrorCode::InvalidArgument, "edge table needs at least two vertices");
  const double scale = d_.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < d_.rows(); ++i) {
    require(d_(i, i) == 0.0, ErrorCode::InvalidArgument, "edge table diagonal must be zero");
    for (Eigen::Index j = i + 1; j < d_.cols(); ++j) {
      require(std::isfinite(d_(i, j)) && d_(i, j) > 0.0, ErrorCode::InvalidArgument,
              "edge lengths must be positive and finite");
      require(std::abs(d_(i, j) - d_(j, i)) <= 1e-12 * scale, ErrorCode::InvalidArgument,
              "edge table must be symmetric");
      d_(j, i) = d_(i, j);
    }
  }
}

EdgeLengthTable EdgeLengthTable::from_pairs(int dimension, std::span<const double> values) {
  require(dimension >= 1, ErrorCode::InvalidArgument, "dimension must be at least 1");
  const int count = dimension + 1;
  const auto expected = static_cast<std::size_t>(count * (count - 1) / 2);
  require(values.size() == expected, ErrorCode::InvalidArgument,
          "expected " + std::to_string(expected) + " edge lengths for dimension " +
              std::to_string(dimension) + ", got " + std::to_string(values.size()));
  Matrix d = Matrix::Zero(count, count);
  std::size_t k = 0;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      d(i, j) = d(j, i) = values[k++];
    }
  }
  return EdgeLengthTable(std::move(d));
}

std::vector<double> EdgeLengthTable::pair_values() const {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < d_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < d_.cols(); ++j) out.push_back(d_(i, j));
  return out;
}

EdgeLengthTable EdgeLengthTable::sub_table(std::span<const int> indices) const {
  const auto m = static_cast<Eigen::Index>(indices.size());
  Matrix sub(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) sub(a, b) = d_(indices[a], indices[b]);
  return EdgeLengthTable(std::move(sub));
}

double cayley_menger_squared_volume(const EdgeLengthTable& table) {
  const int count = table.vertex_count();
  const int k = count - 1;
  Matrix cm = Matrix::Ones(count + 1, count + 1);
  cm(0, 0) = 0.0;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) cm(i + 1, j + 1) = table(i, j) * table(i, j);
  const double sign = (k + 1) % 2 == 0 ? 1.0 : -1.0;
  const double denom = std::pow(2.0, k) * factorial(k) * factorial(k);
  return sign * cm.determinant() / denom;
}

// ---------------------------------------------------------------------------
// BarycentricPoint

BarycentricPoint BarycentricPoint::homogeneous(Vector coords) {
  require(coords.size() >= 2, ErrorCode::InvalidArgument, "barycentric point needs >= 2 coordinates");
  require(coords.allFinite(), ErrorCode::InvalidArgument, "barycentric coordinates must be finite");
  require(coords.cwiseAbs().maxCoeff() > 0.0, ErrorCode::InvalidArgument,
          "barycentric coordinates must not all be zero");
  return BarycentricPoint(std::move(coords), Mode::homogeneous);
}

BarycentricPoint BarycentricPoint::normalized(Vector coords) {
  auto p = homogeneous(std::move(coords));
  return BarycentricPoint(p.normalized_coords(), Mode::normalized);
}

BarycentricPoint BarycentricPoint::vertex(int vertex_count, int index) {
  Vector c = Vector::Zero(vertex_count);
  c(index) = 1.0;
  return BarycentricPoint(std::move(c), Mode::normalized);
}

BarycentricPoint BarycentricPoint::centroid(int vertex_count) {
  return BarycentricPoint(Vector::Constant(vertex_count, 1.0 / vertex_count), Mode::normalized);
}

bool BarycentricPoint::is_finite() const {
  return std::abs(coords_.sum()) > kInfinityEps * coords_.cwiseAbs().maxCoeff();
}

Vector BarycentricPoint::normalized_coords() const {
  if (mode_ == Mode::normalized) return coords_;
  require(is_finite(), ErrorCode::PointAtInfinity, "coordinate sum is zero");
  return coords_ / coords_.sum();
}

Vector BarycentricPoint::display_coords() const {
  Eigen::Index k = 0;
  coords_.cwiseAbs().maxCoeff(&k);
  return coords_ / coords_(k);
}

bool BarycentricPoint::has_zero_coordinate(double eps) const {
  return (coords_.cwiseAbs().array() <= eps * coords_.cwiseAbs().maxCoeff()).any();
}

BarycentricPoint barycentric_square(const BarycentricPoint& p) {
  return BarycentricPoint::homogeneous(p.coords().cwiseProduct(p.coords()));
}

double normalized_distance(const BarycentricPoint& a, const BarycentricPoint& b) {
  require(a.size() == b.size(), ErrorCode::InvalidArgument, "point sizes differ");
  return (a.normalized_coords() - b.normalized_coords()).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Hyperplane

Hyperplane Hyperplane::from_bary(Vector coeffs, const SimplexModel& model) {
  require(coeffs.size() == model.vertex_count(), ErrorCode::InvalidArgument,
          "hyperplane coefficient count must match vertex count");
  const double mean = coeffs.mean();
  const double spread = (coeffs.array() - mean).abs().maxCoeff();
  require(spread > 1e-12 * coeffs.cwiseAbs().maxCoeff(), ErrorCode::AtInfinity,
          "all coefficients equal: hyperplane at infinity");

  // sum c_i p_i(x) with p(x) = M^{-1} [x; 1] equals w . [x; 1] where M^T w = c.
  const int n = model.dimension();
  Matrix m(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    m.col(i).head(n) = model.vertex(i);
    m(n, i) = 1.0;
  }
  const Vector w = m.transpose().partialPivLu().solve(coeffs);
  const double norm = w.head(n).norm();
  Hyperplane h;
  h.bary_coeffs = std::move(coeffs);
  h.normal = w.head(n) / norm;
  h.offset = -w(n) / norm;
  return h;
}

Hyperplane Hyperplane::from_cartesian(const Vector& normal, double offset,
                                      const SimplexModel& model) {
  const double norm = normal.norm();
  require(norm > 0.0 && normal.size() == model.dimension(), ErrorCode::InvalidArgument,
          "hyperplane normal must be nonzero with the ambient dimension");
  Hyperplane h;
  h.normal = normal / norm;
  h.offset = offset / norm;
  h.bary_coeffs.resize(model.vertex_count());
  for (int k = 0; k < model.vertex_count(); ++k)
    h.bary_coeffs(k) = h.normal.dot(model.vertex(k)) - h.offset;
  return h;
}

double Hyperplane::evaluate(const BarycentricPoint& p) const {
  return bary_coeffs.dot(p.normalized_coords());
}

// ---------------------------------------------------------------------------
// SimplexModel

SimplexModel::SimplexModel(std::vector<Vector> vertices, EdgeLengthTable edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = dimension();
  Matrix m(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    m.col(i).head(n) = vertices_[static_cast<std::size_t>(i)];
    m(n, i) = 1.0;
  }
  affine_lu_.compute(m);
  diameter_ = edges_.matrix().maxCoeff();
  volume_ = std::abs(m.determinant()) / factorial(n);

  facet_volumes_.resize(n + 1);
  std::vector<int> idx;
  for (int i = 0; i <= n; ++i) {
    idx.clear();
    for (int j = 0; j <= n; ++j)
      if (j != i) idx.push_back(j);
    if (idx.size() == 1) {
      facet_volumes_(i) = 1.0;
      continue;
    }
    facet_volumes_(i) = std::sqrt(std::max(0.0, cayley_menger_squared_volume(edges_.sub_table(idx))));
  }

  // x_i = 0 with the normal pointing away from A_i
  for (int i = 0; i <= n; ++i) {
    Vector c = Vector::Zero(n + 1);
    c(i) = -1.0;
    facet_planes_.push_back(Hyperplane::from_bary(std::move(c), *this));
  }
}

SimplexModel SimplexModel::from_vertices(std::vector<Vector> vertices) {
  require(vertices.size() >= 2, ErrorCode::InvalidArgument, "a simplex needs at least two vertices");
  const auto n = static_cast<Eigen::Index>(vertices.size()) - 1;
  for (const auto& v : vertices) {
    require(v.size() == n, ErrorCode::InvalidArgument,
            "each of the n+1 vertices must have n coordinates");
    require(v.allFinite(), ErrorCode::InvalidArgument, "vertex coordinates must be finite");
  }
  Matrix d = Matrix::Zero(n + 1, n + 1);
  for (Eigen::Index i = 0; i <= n; ++i)
    for (Eigen::Index j = i + 1; j <= n; ++j)
      d(i, j) = d(j, i) = (vertices[static_cast<std::size_t>(i)] - vertices[static_cast<std::size_t>(j)]).norm();
  require((d + Matrix::Identity(n + 1, n + 1)).minCoeff() > 0.0, ErrorCode::Degenerate,
          "coincident vertices");

  Matrix e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    e.row(i) = (vertices[static_cast<std::size_t>(i + 1)] - vertices[0]).transpose();
  const double diam = d.maxCoeff();
  require(std::abs(e.determinant()) > 1e-12 * std::pow(diam, static_cast<double>(n)),
          ErrorCode::Degenerate, "vertices are affinely dependent");
  return SimplexModel(std::move(vertices), EdgeLengthTable(std::move(d)));
}

Vector SimplexModel::bary_to_cart(const BarycentricPoint& p) const {
  require(p.size() == vertex_count(), ErrorCode::InvalidArgument,
          "coordinate count must match vertex count");
  const Vector w = p.normalized_coords();
  Vector x = Vector::Zero(dimension());
  for (int i = 0; i < vertex_count(); ++i) x += w(i) * vertex(i);
  return x;
}

BarycentricPoint SimplexModel::cart_to_bary(const Vector& x) const {
  require(x.size() == dimension(), ErrorCode::InvalidArgument, "point dimension mismatch");
  const int n = dimension();
  Vector rhs(n + 1);
  rhs.head(n) = x;
  rhs(n) = 1.0;
  Vector p = affine_lu_.solve(rhs);
  // one refinement step against the affine map
  Vector residual = rhs;
  for (int i = 0; i <= n; ++i) {
    residual.head(n) -= p(i) * vertex(i);
    residual(n) -= p(i);
  }
  p += affine_lu_.solve(residual);
  return BarycentricPoint::normalized(std::move(p));
}

SimplexModel embed_from_edge_lengths(const EdgeLengthTable& table) {
  const int n = table.dimension();
  require(n >= 1, ErrorCode::InvalidArgument, "edge table needs at least two vertices");
  const double scale2 = table.matrix().maxCoeff() * table.matrix().maxCoeff();
  // Gram matrix of A_k - A_1, k = 2..n+1, from the polarization identity.
  Matrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double d0i = table(0, i + 1), d0j = table(0, j + 1), dij = table(i + 1, j + 1);
      gram(i, j) = 0.5 * (d0i * d0i + d0j * d0j - dij * dij);
    }

  // Cholesky by hand so each pivot can be classified: its square is
  // proportional to the squared volume ratio of consecutive sub-simplices.
  Matrix lower = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    double pivot2 = gram(k, k) - lower.row(k).head(k).squaredNorm();
    if (pivot2 < -kDegeneratePivot * scale2)
      throw GeometryError(ErrorCode::NotEmbeddable,
                          "Cayley-Menger sign violated at vertex " + std::to_string(k + 2));
    if (pivot2 <= kDegeneratePivot * scale2)
      throw GeometryError(ErrorCode::Degenerate,
                          "zero sub-simplex volume at vertex " + std::to_string(k + 2));
    lower(k, k) = std::sqrt(pivot2);
    for (int r = k + 1; r < n; ++r)
      lower(r, k) = (gram(r, k) - lower.row(r).head(k).dot(lower.row(k).head(k))) / lower(k, k);
  }

  std::vector<Vector> vertices;
  vertices.emplace_back(Vector::Zero(n));
  for (int k = 0; k < n; ++k) vertices.emplace_back(lower.row(k).transpose());
  return SimplexModel::from_vertices(std::move(vertices));
}

double squared_distance(const BarycentricPoint& p, const BarycentricPoint& q,
                        const SimplexModel& model) {
  require(p.size() == model.vertex_count() && q.size() == model.vertex_count(),
          ErrorCode::InvalidArgument, "coordinate count must match vertex count");
  const Vector u = p.normalized_coords() - q.normalized_coords();
  const auto& d = model.edges();
  double sum = 0.0;
  for (int i = 0; i < model.vertex_count(); ++i)
    for (int j = i + 1; j < model.vertex_count(); ++j) sum += d(i, j) * d(i, j) * u(i) * u(j);
  return -sum;
}

double distance(const BarycentricPoint& p, const BarycentricPoint& q, const SimplexModel& model) {
  return std::sqrt(std::max(0.0, squared_distance(p, q, model)));
}

double simplex_volume(const std::vector<Vector>& points) {
  if (points.size() <= 1) return 1.0;
  const auto k = static_cast<Eigen::Index>(points.size()) - 1;
  Matrix e(points[0].size(), k);
  for (Eigen::Index i = 0; i < k; ++i) e.col(i) = points[static_cast<std::size_t>(i + 1)] - points[0];
  const double gram_det = (e.transpose() * e).determinant();
  return std::sqrt(std::max(0.0, gram_det)) / factorial(static_cast<int>(k));
}

Vector facet_volumes_of(const std::vector<Vector>& points) {
  const auto count = static_cast<Eigen::Index>(points.size());
  Vector out(count);
  std::vector<Vector> facet;
  for (Eigen::Index i = 0; i < count; ++i) {
    facet.clear();
    for (Eigen::Index j = 0; j < count; ++j)
      if (j != i) facet.push_back(points[static_cast<std::size_t>(j)]);
    out(i) = simplex_volume(facet);
  }
  return out;
}

ClassicalCenters classical_centers(const SimplexModel& model) {
  const Vector& a = model.facet_volumes();
  return ClassicalCenters{
      BarycentricPoint::centroid(model.vertex_count()),
      BarycentricPoint::homogeneous(a),
      BarycentricPoint::homogeneous(a.cwiseProduct(a)),
      model.cart_to_bary(circumsphere(model).center),
  };
}

Hyperplane sigma_polar_plane(const BarycentricPoint& p, const SimplexModel& model) {
  require(!p.has_zero_coordinate(), ErrorCode::OnSideplane, "point lies on a sideplane");
  return Hyperplane::from_bary(p.coords().cwiseInverse(), model);
}

Sphere circumsphere(const SimplexModel& model) {
  const int n = model.dimension();
  Matrix lhs(n, n);
  Vector rhs(n);
  const Vector& a0 = model.vertex(0);
  for (int i = 0; i < n; ++i) {
    const Vector& ai = model.vertex(i + 1);
    lhs.row(i) = 2.0 * (ai - a0).transpose();
    rhs(i) = (ai - a0).squaredNorm();
  }
  Sphere s;
  s.center = a0 + lhs.partialPivLu().solve(rhs);
  double r = 0.0;
  for (const auto& v : model.vertices()) r += (v - s.center).norm();
  s.radius = r / model.vertex_count();
  return s;
}

}  // namespace simplex
