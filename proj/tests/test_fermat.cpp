#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "simplex/fermat.hpp"
#include "simplex/pedal.hpp"

using namespace simplex;
using oracle::vec;

namespace {

SimplexModel five_point() {
  return SimplexModel::from_vertices({vec({0, 0, 0}), vec({6, 0, 0}), vec({0, 8, 0}), vec({2, 2, 6})});
}

SimplexModel random_simplex(std::mt19937& rng, int n) {
  std::normal_distribution<double> g;
  while (true) {
    std::vector<Vector> v;
    for (int i = 0; i <= n; ++i) {
      Vector x(n);
      for (int k = 0; k < n; ++k) x(k) = g(rng);
      v.push_back(x);
    }
    const SimplexModel m = SimplexModel::from_vertices(v);
    if (std::pow(m.volume(), 1.0 / n) > 0.1 * m.diameter()) return m;
  }
}

BarycentricPoint random_interior(std::mt19937& rng, int count) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  Vector c(count);
  for (int i = 0; i < count; ++i) c(i) = u(rng);
  return BarycentricPoint::normalized(c);
}

const Vector kF0 = vec({0.369979160947, 0.229493293826, 0.163611619856, 0.236915925371});

}  // namespace

TEST_CASE("method names") {
  CHECK(parse_weiszfeld_method("q") == WeiszfeldMethod::q);
  CHECK(parse_weiszfeld_method("R") == WeiszfeldMethod::r);
  CHECK(parse_weiszfeld_method("classic") == WeiszfeldMethod::classic);
  CHECK_FALSE(parse_weiszfeld_method("newton").has_value());
  CHECK(std::string(to_string(WeiszfeldMethod::r)) == "r");
}

TEST_CASE("Z-correspondents") {
  const auto p = BarycentricPoint::homogeneous(vec({0.5, 0.25, 0.25}));
  CHECK(normalized_distance(z_correspondent(p, BarycentricPoint::homogeneous(vec({1, 2, 1}))),
                            BarycentricPoint::homogeneous(vec({4, 1, 2}))) < 1e-15);

  std::mt19937 rng(53);
  std::uniform_real_distribution<double> u(0.2, 2.0);
  for (int t = 0; t < 100; ++t) {
    const int count = 3 + t % 3;
    Vector c(count);
    for (int i = 0; i < count; ++i) c(i) = (i % 2 ? -1.0 : 1.0) * u(rng);
    if (std::abs(c.sum()) < 0.1) continue;
    const auto q = BarycentricPoint::homogeneous(c);
    CHECK(normalized_distance(z_correspondent(q, BarycentricPoint::centroid(count)), q) <= 1e-12);
    CHECK(normalized_distance(z_correspondent(q, q), BarycentricPoint::centroid(count)) <= 1e-12);
  }
  CHECK_THROWS_AS(z_correspondent(p, BarycentricPoint::homogeneous(vec({1, 0, 1}))), GeometryError);
}

TEST_CASE("Q step is the Weiszfeld update") {
  const SimplexModel m = five_point();
  std::mt19937 rng(59);
  for (int t = 0; t < 20; ++t) {
    const BarycentricPoint p = random_interior(rng, 4);
    const Vector expected = oracle::weiszfeld_update(m.vertices(), m.bary_to_cart(p));
    CHECK((m.bary_to_cart(weiszfeld_step_q(p, m)) - expected).norm() < 1e-12);
    CHECK((m.bary_to_cart(weiszfeld_step_classic(p, m)) - expected).norm() < 1e-12);
  }
}

TEST_CASE("Q step equals P # I* for the incenter of the polar simplex") {
  std::mt19937 rng(61);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + t % 3;
    const SimplexModel m = random_simplex(rng, n);
    const BarycentricPoint p = random_interior(rng, n + 1);
    const PedalResult polar = polar_simplex(p, 1.0, m);
    REQUIRE(polar.simplex);
    const BarycentricPoint i_star = classical_centers(*polar.simplex).incenter;
    CHECK(normalized_distance(z_correspondent(p, i_star), weiszfeld_step_q(p, m)) <= 1e-9);
    CHECK(normalized_distance(incenter_correspondent(p, m), weiszfeld_step_q(p, m)) <= 1e-12);
  }
}

TEST_CASE("regular simplex center is a fixed point") {
  const std::vector<double> d(6, 1.0);
  const SimplexModel m = embed_from_edge_lengths(EdgeLengthTable::from_pairs(3, d));
  const auto g = BarycentricPoint::centroid(4);
  CHECK(normalized_distance(weiszfeld_step_q(g, m), g) < 1e-14);
  CHECK(normalized_distance(weiszfeld_step_r(g, m), g) < 1e-14);
  CHECK(total_distance(g, m) == doctest::Approx(4 * std::sqrt(3.0 / 8)).epsilon(1e-12));
}

TEST_CASE("steps reject vertices") {
  const SimplexModel m = five_point();
  try {
    weiszfeld_step_q(BarycentricPoint::vertex(4, 1), m);
    FAIL("expected an error");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::AtVertex);
  }
}

TEST_CASE("total distance") {
  const SimplexModel eq = SimplexModel::from_vertices({vec({0, 0}), vec({1, 0}), vec({0.5, std::sqrt(3.0) / 2})});
  CHECK(total_distance(BarycentricPoint::vertex(3, 0), eq) == doctest::Approx(2.0).epsilon(1e-14));

  const SimplexModel m = five_point();
  const auto f0 = BarycentricPoint::normalized(kF0);
  const double at_f0 = total_distance(f0, m);
  CHECK(at_f0 == doctest::Approx(oracle::total_distance(m.vertices(), m.bary_to_cart(f0))).epsilon(1e-12));
  CHECK(at_f0 < total_distance(BarycentricPoint::centroid(4), m));
  for (int i = 0; i < 4; ++i) CHECK(at_f0 < total_distance(BarycentricPoint::vertex(4, i), m));
}

TEST_CASE("Fermat point of the five-point tetrahedron") {
  const SimplexModel m = five_point();
  for (WeiszfeldMethod method : {WeiszfeldMethod::q, WeiszfeldMethod::r, WeiszfeldMethod::classic}) {
    FermatOptions opts;
    opts.method = method;
    const FermatResult r = fermat_point(m, BarycentricPoint::centroid(4), opts);
    CHECK(r.trace.converged);
    CHECK_FALSE(r.vertex.has_value());
    CHECK((r.point.normalized_coords() - kF0).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(r.trace.iterates.size() == r.trace.objective_values.size());
  }
}

TEST_CASE("first-order optimality at the limit") {
  const SimplexModel m = five_point();
  const FermatResult r = fermat_point(m, BarycentricPoint::centroid(4));
  const Vector x = m.bary_to_cart(r.point);
  const Vector g = total_distance_gradient(x, m);
  CHECK(g.norm() <= 1e-7);
  CHECK((oracle::fd_gradient(m.vertices(), x, 1e-6) - g).cwiseAbs().maxCoeff() <= 1e-5);
  // away from the optimum the gradient still matches finite differences
  const Vector y = x + vec({0.3, -0.2, 0.1});
  CHECK((oracle::fd_gradient(m.vertices(), y, 1e-6) - total_distance_gradient(y, m)).cwiseAbs().maxCoeff() <= 1e-5);
}

TEST_CASE("Q iterates never increase the total distance") {
  const SimplexModel m = five_point();
  std::mt19937 rng(67);
  for (int t = 0; t < 10; ++t) {
    const FermatResult r = fermat_point(m, random_interior(rng, 4));
    const auto& obj = r.trace.objective_values;
    for (std::size_t k = 1; k < obj.size(); ++k) CHECK(obj[k] <= obj[k - 1] + 1e-12);
  }
}

TEST_CASE("exterior starts enter the simplex") {
  const SimplexModel m = five_point();
  const FermatResult r = fermat_point(m, BarycentricPoint::homogeneous(vec({2, -1, 0.5, 0.3})));
  REQUIRE(r.trace.iterates.size() > 1);
  CHECK(r.trace.iterates[1].minCoeff() > 0.0);
  CHECK((r.point.normalized_coords() - kF0).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("Q and R agree on random simplices") {
  // R linearizes to 2 J_Q - I at the limit, so it crawls where Q is fast and
  // needs a larger budget than the default.
  std::mt19937 rng(71);
  for (int t = 0; t < 10; ++t) {
    const int n = 2 + t % 3;
    const SimplexModel m = random_simplex(rng, n);
    for (int s = 0; s < 10; ++s) {
      const BarycentricPoint start = random_interior(rng, n + 1);
      FermatOptions q, r;
      r.method = WeiszfeldMethod::r;
      r.max_iterations = 100000;
      const FermatResult a = fermat_point(m, start, q);
      const FermatResult b = fermat_point(m, start, r);
      CHECK(a.trace.converged);
      CHECK(b.trace.converged);
      CHECK(normalized_distance(a.point, b.point) <= 1e-8);
    }
  }
}

TEST_CASE("equilateral triangle gives the centroid") {
  const SimplexModel eq = SimplexModel::from_vertices({vec({0, 0}), vec({1, 0}), vec({0.5, std::sqrt(3.0) / 2})});
  const FermatResult r = fermat_point(eq, BarycentricPoint::normalized(vec({0.5, 0.3, 0.2})));
  CHECK(normalized_distance(r.point, BarycentricPoint::centroid(3)) <= 1e-10);
}

TEST_CASE("obtuse vertex is the minimizer") {
  const std::vector<double> d{1, 1, 1.95};
  const SimplexModel m = embed_from_edge_lengths(EdgeLengthTable::from_pairs(2, d));
  CHECK(vertex_optimality_norm(m, 0) <= 1.0);
  CHECK(vertex_optimality_norm(m, 1) > 1.0);
  const FermatResult r = fermat_point(m, BarycentricPoint::centroid(3));
  REQUIRE(r.vertex.has_value());
  CHECK(*r.vertex == 0);
  CHECK(r.trace.converged);
  CHECK(normalized_distance(r.point, BarycentricPoint::vertex(3, 0)) == 0.0);
}

TEST_CASE("iteration budget is reported") {
  const SimplexModel m = five_point();
  FermatOptions opts;
  opts.max_iterations = 3;
  const FermatResult r = fermat_point(m, BarycentricPoint::centroid(4), opts);
  CHECK_FALSE(r.trace.converged);
  CHECK(r.trace.iterations_used == 3);
  CHECK(r.trace.iterates.size() == 4);
}

TEST_CASE("start with a zero coordinate is rejected") {
  try {
    fermat_point(five_point(), BarycentricPoint::homogeneous(vec({1, 1, 0, 1})));
    FAIL("expected an error");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::ZeroCoordinate);
  }
}
