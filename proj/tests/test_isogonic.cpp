#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "simplex/fermat.hpp"
#include "simplex/isogonic.hpp"
#include "simplex/pedal.hpp"

using namespace simplex;
using oracle::vec;

namespace {

SimplexModel five_point() {
  return SimplexModel::from_vertices({vec({0, 0, 0}), vec({6, 0, 0}), vec({0, 8, 0}), vec({2, 2, 6})});
}

SimplexModel regular_tetrahedron() {
  const std::vector<double> d(6, 1.0);
  return embed_from_edge_lengths(EdgeLengthTable::from_pairs(3, d));
}

double max_gap(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }

const std::array<Vector, 5> kL{
    vec({0.266996565955, 0.275481800939, 0.217355830792, 0.240165802314}),
    vec({-4.180629474014, 2.569387212447, 1.602113038329, 1.009129223238}),
    vec({1.193250865914, -1.252645952150, 0.354761022780, 0.704634063455}),
    vec({0.713260932730, 0.358215195120, -0.616627271982, 0.545151144132}),
    vec({0.657546390333, 0.802131717931, 0.639088262811, -1.098766371077}),
};
const std::array<Vector, 5> kF{
    vec({0.369979160947, 0.229493293826, 0.163611619856, 0.236915925371}),
    vec({-0.297000489955, 0.309278164652, 0.279002561033, 0.708719764270}),
    vec({0.388102931405, -0.236608485604, 0.469943106828, 0.378562447371}),
    vec({0.382915343108, 0.487963317698, -0.159452369671, 0.288573708865}),
    vec({0.645021938255, 0.338403751068, 0.238914519123, -0.222340208446}),
};

}  // namespace

TEST_CASE("isogonal conjugate") {
  const SimplexModel m = five_point();
  const ClassicalCenters c = classical_centers(m);
  CHECK(normalized_distance(isogonal_conjugate(c.centroid, m), c.symmedian) < 1e-12);
  CHECK(normalized_distance(isogonal_conjugate(c.incenter, m), c.incenter) < 1e-12);
  // conj(L_k) = F_k with facet areas (10 sqrt 10, 8 sqrt 10, 6 sqrt 10, 24)
  for (std::size_t k = 0; k < 5; ++k)
    CHECK(max_gap(isogonal_conjugate(BarycentricPoint::homogeneous(kL[k]), m).normalized_coords(), kF[k]) <= 1e-9);

  std::mt19937 rng(73);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int t = 0; t < 100; ++t) {
    const auto p = BarycentricPoint::homogeneous(vec({u(rng), -u(rng), u(rng), u(rng)}));
    if (std::abs(p.coords().sum()) < 0.1) continue;
    const BarycentricPoint once = isogonal_conjugate(p, m);
    if (std::abs(once.coords().sum()) < 1e-6 * once.coords().cwiseAbs().maxCoeff()) continue;
    CHECK(normalized_distance(isogonal_conjugate(once, m), p) <= 1e-12 * std::max(1.0, p.normalized_coords().cwiseAbs().maxCoeff()));
  }
  try {
    isogonal_conjugate(BarycentricPoint::homogeneous(vec({0, 1, 1, 1})), m);
    FAIL("expected an error");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::ZeroCoordinate);
  }
}

TEST_CASE("triangle conjugate matches the classical formula") {
  const SimplexModel m = SimplexModel::from_vertices({vec({0, 0}), vec({4, 0}), vec({1, 3})});
  const auto p = BarycentricPoint::homogeneous(vec({1, 2, 3}));
  const double a2 = std::pow(m.edges()(1, 2), 2), b2 = std::pow(m.edges()(0, 2), 2), c2 = std::pow(m.edges()(0, 1), 2);
  CHECK(normalized_distance(isogonal_conjugate(p, m), BarycentricPoint::homogeneous(vec({a2, b2 / 2, c2 / 3}))) < 1e-14);
}

TEST_CASE("pedal iteration") {
  SUBCASE("regular simplex is constant") {
    const PedalIterationResult r = pedal_equiareal_iteration(BarycentricPoint::centroid(4), regular_tetrahedron());
    CHECK(r.converged());
    CHECK(r.iterations <= 1);
    CHECK(normalized_distance(r.point, BarycentricPoint::centroid(4)) < 1e-14);
  }
  SUBCASE("centroid start reaches L_0") {
    const PedalIterationResult r = pedal_equiareal_iteration(BarycentricPoint::centroid(4), five_point());
    CHECK(r.converged());
    CHECK(max_gap(r.point.normalized_coords(), kL[0]) <= 1e-9);
    CHECK(r.residuals.size() == static_cast<std::size_t>(r.iterations) + 1);
  }
  SUBCASE("start near L_1") {
    const PedalIterationResult r =
        pedal_equiareal_iteration(BarycentricPoint::normalized(vec({-4, 2.5, 1.6, 1})), five_point());
    CHECK(r.converged());
    CHECK(max_gap(r.point.normalized_coords(), kL[1]) <= 1e-9);
  }
  SUBCASE("budget exhaustion is reported") {
    PedalIterationOptions opts;
    opts.max_iterations = 2;
    const PedalIterationResult r = pedal_equiareal_iteration(BarycentricPoint::centroid(4), five_point(), opts);
    CHECK(r.status == PedalIterationStatus::max_iterations);
    CHECK(r.iterations == 2);
  }
}

TEST_CASE("Newton on the equiareal conditions") {
  const SimplexModel m = five_point();
  for (std::size_t k = 0; k < 5; ++k) {
    Vector start = kL[k];
    start(0) += 0.01;
    const PedalIterationResult r = equiareal_newton(BarycentricPoint::homogeneous(start), m);
    CHECK(r.converged());
    CHECK(max_gap(r.point.normalized_coords(), kL[k]) <= 1e-9);
  }
}

TEST_CASE("is_isogonic") {
  const SimplexModel m = five_point();
  const IsogonicCheck f0 = is_isogonic(BarycentricPoint::homogeneous(kF[0]), m);
  CHECK(f0.isogonic);
  CHECK(f0.deviation <= 1e-8);
  const Vector anti = antipedal_simplex(BarycentricPoint::homogeneous(kF[0]), m).facet_volumes();
  for (int i = 0; i < 4; ++i) CHECK(anti(i) == doctest::Approx(241.637142362610).epsilon(1e-6));

  const IsogonicCheck g = is_isogonic(BarycentricPoint::centroid(4), m);
  CHECK_FALSE(g.isogonic);
  CHECK(g.deviation == doctest::Approx(equiareal_deviation(antipedal_simplex(BarycentricPoint::centroid(4), m))));
  CHECK(is_isogonic(BarycentricPoint::centroid(4), regular_tetrahedron()).isogonic);
}

TEST_CASE("catalog of the five-point tetrahedron") {
  const SimplexModel m = five_point();
  const IsogonicCatalog cat = enumerate_isogonic(m);
  REQUIRE(cat.entries.size() == 5);
  const std::array<double, 5> pedal{2.404772767371, 122.125536031480, 19.392997370805, 9.848601171111,
                                    18.965046082427};
  const std::array<double, 5> anti{241.637142362610, 60.087819904352, 31.387257487815, 5.647726265255,
                                   31.003305976553};
  for (std::size_t k = 0; k < 5; ++k) {
    const IsogonicEntry& e = cat.entries[k];
    CHECK(max_gap(e.conjugate_point.normalized_coords(), kL[k]) <= 1e-9);
    CHECK(max_gap(e.isogonic_point.normalized_coords(), kF[k]) <= 1e-9);
    CHECK(e.pedal_area == doctest::Approx(pedal[k]).epsilon(1e-6));
    CHECK(e.antipedal_area == doctest::Approx(anti[k]).epsilon(1e-6));
    CHECK(e.pedal_deviation <= 1e-7);
    CHECK(e.antipedal_deviation <= 1e-7);
    // the antipedal simplex is also equifacetal in dimension 3
    CHECK(triad_angle_check(e.isogonic_point, m).congruent);
  }
  CHECK(cat.seeds.size() >= 5);
}

TEST_CASE("regular tetrahedron catalog contains the center") {
  const IsogonicCatalog cat = enumerate_isogonic(regular_tetrahedron());
  REQUIRE_FALSE(cat.entries.empty());
  CHECK(normalized_distance(cat.entries[0].isogonic_point, BarycentricPoint::centroid(4)) < 1e-10);
}

TEST_CASE("triangles have exactly two isogonic points") {
  std::mt19937 rng(79);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int done = 0;
  while (done < 25) {
    const std::array<Vector, 3> v{vec({u(rng), u(rng)}), vec({u(rng), u(rng)}), vec({u(rng), u(rng)})};
    const SimplexModel m = SimplexModel::from_vertices({v[0], v[1], v[2]});
    const Vector& s = m.facet_volumes();
    if (m.volume() < 0.05 * m.diameter() * m.diameter() || s.maxCoeff() / s.minCoeff() < 1.05) continue;
    ++done;
    const IsogonicCatalog cat = enumerate_isogonic(m);
    REQUIRE(cat.entries.size() == 2);
    for (const auto& e : cat.entries) {
      const Vector x = m.bary_to_cart(e.isogonic_point);
      const auto tri = oracle::antipedal_triangle(v, x);
      REQUIRE(tri.has_value());
      const auto& t = *tri;
      CHECK(oracle::relative_spread({(t[0] - t[1]).norm(), (t[1] - t[2]).norm(), (t[0] - t[2]).norm()}) <= 1e-8);
      const double gap = std::min((x - oracle::torricelli(v, true)).norm(), (x - oracle::torricelli(v, false)).norm());
      CHECK(gap <= 1e-8 * std::max(1.0, x.norm()));
    }
    // the all-positive point, when present, is the Fermat-Torricelli point
    const Vector first = cat.entries[0].isogonic_point.normalized_coords();
    if (first.minCoeff() > 0.0) {
      const FermatResult f = fermat_point(m, BarycentricPoint::centroid(3));
      CHECK(normalized_distance(f.point, cat.entries[0].isogonic_point) <= 1e-8);
    }
  }
}

TEST_CASE("extra seeds and options") {
  const SimplexModel m = five_point();
  EnumerateOptions opts;
  opts.use_default_seeds = false;
  opts.extra_seeds = {BarycentricPoint::centroid(4)};
  const IsogonicCatalog cat = enumerate_isogonic(m, opts);
  REQUIRE(cat.entries.size() == 1);
  CHECK(max_gap(cat.entries[0].isogonic_point.normalized_coords(), kF[0]) <= 1e-9);
  CHECK(cat.seeds.front().method == SeedMethod::pedal_iteration);
  CHECK(cat.seeds.front().entry_index == 0);

  CHECK(default_isogonic_seeds(4).size() == 5);
  CHECK(normalized_distance(default_isogonic_seeds(4)[0], BarycentricPoint::centroid(4)) == 0.0);
}

TEST_CASE("triad angle check") {
  const SimplexModel m = five_point();
  CHECK(triad_angle_check(BarycentricPoint::homogeneous(kF[0]), m).congruent);
  CHECK_FALSE(triad_angle_check(BarycentricPoint::centroid(4), m).congruent);
  const TriadCheck reg = triad_angle_check(BarycentricPoint::centroid(4), regular_tetrahedron());
  CHECK(reg.congruent);
  // the lines from the center to two vertices meet at arccos(-1/3); as lines
  // that is its supplement
  const double expected = M_PI - std::acos(-1.0 / 3.0);
  for (const auto& t : reg.triads)
    for (double a : t) CHECK(a == doctest::Approx(expected).epsilon(1e-12));
  CHECK_THROWS_AS(triad_angle_check(BarycentricPoint::centroid(3),
                                    SimplexModel::from_vertices({vec({0, 0}), vec({1, 0}), vec({0, 1})})),
                  GeometryError);
}
