#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "commands.hpp"
#include "report.hpp"
#include "simplex/apollonian.hpp"
#include "simplex/fermat.hpp"
#include "simplex/isogonic.hpp"
#include "simplex/pedal.hpp"

namespace simplex::cli {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct Row {
  std::string group;
  std::string check;
  std::string expected;
  std::string computed;
  double error = 0.0;
  double tolerance = 0.0;
  bool numeric = true;
  bool pass = false;
};

std::string coords_text(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fixed12(v[i]);
  return out + "]";
}

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

std::string sci(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

class Sheet {
 public:
  explicit Sheet(std::optional<double> override_tol) : override_(override_tol) {}

  void numeric(const std::string& group, const std::string& check, std::string expected, std::string computed,
               double error, double tol) {
    const double t = override_.value_or(tol);
    rows_.push_back({group, check, std::move(expected), std::move(computed), error, t, true,
                     std::isfinite(error) && error <= t});
  }
  void coords(const std::string& group, const std::string& check, const std::vector<double>& expected,
              const Vector& computed, double tol) {
    double err = expected.size() == static_cast<std::size_t>(computed.size()) ? 0.0 : INFINITY;
    for (std::size_t i = 0; std::isfinite(err) && i < expected.size(); ++i)
      err = std::max(err, std::abs(expected[i] - computed(static_cast<Eigen::Index>(i))));
    numeric(group, check, coords_text(expected), coords_text(to_std(computed)), err, tol);
  }
  void relative(const std::string& group, const std::string& check, double expected, double computed, double tol) {
    numeric(group, check, fixed12(expected), fixed12(computed), std::abs(computed - expected) / std::abs(expected),
            tol);
  }
  void at_most(const std::string& group, const std::string& check, double value, double bound) {
    numeric(group, check, "<= " + sci(override_.value_or(bound)), sci(value), value, bound);
  }
  void boolean(const std::string& group, const std::string& check, std::string expected, std::string computed,
               bool pass) {
    rows_.push_back({group, check, std::move(expected), std::move(computed), 0.0, 0.0, false, pass});
  }
  void missing(const std::string& group, const std::string& check) {
    boolean(group, check, "present", "missing", false);
  }

  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::optional<double> override_;
  std::vector<Row> rows_;
};

Vector vec(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

SimplexModel five_point_tetrahedron() {
  return SimplexModel::from_vertices({vec({0, 0, 0}), vec({6, 0, 0}), vec({0, 8, 0}), vec({2, 2, 6})});
}

const std::array<std::vector<double>, 5> kL{{
    {0.266996565955, 0.275481800939, 0.217355830792, 0.240165802314},
    {-4.180629474014, 2.569387212447, 1.602113038329, 1.009129223238},
    {1.193250865914, -1.252645952150, 0.354761022780, 0.704634063455},
    {0.713260932730, 0.358215195120, -0.616627271982, 0.545151144132},
    {0.657546390333, 0.802131717931, 0.639088262811, -1.098766371077},
}};
const std::array<std::vector<double>, 5> kF{{
    {0.369979160947, 0.229493293826, 0.163611619856, 0.236915925371},
    {-0.297000489955, 0.309278164652, 0.279002561033, 0.708719764270},
    {0.388102931405, -0.236608485604, 0.469943106828, 0.378562447371},
    {0.382915343108, 0.487963317698, -0.159452369671, 0.288573708865},
    {0.645021938255, 0.338403751068, 0.238914519123, -0.222340208446},
}};
const std::array<double, 5> kPedalArea{2.404772767371, 122.125536031480, 19.392997370805, 9.848601171111,
                                       18.965046082427};
const std::array<double, 5> kAntipedalArea{241.637142362610, 60.087819904352, 31.387257487815, 5.647726265255,
                                           31.003305976553};
const std::vector<double> kJ1{0.206439675828, 0.327649375007, 0.263085414624, 0.20282553454};
const std::vector<double> kJ2{2.954833710960, -0.575606610593, -1.403778427224, 0.024551326857};

void five_point_rows(Sheet& sheet) {
  const std::string g = "five-point tetrahedron";
  const SimplexModel m = five_point_tetrahedron();
  const double r10 = std::sqrt(10.0);
  const Vector expected_facets = vec({10 * r10, 8 * r10, 6 * r10, 24});
  sheet.numeric(g, "facet volumes", coords_text(to_std(expected_facets)), coords_text(to_std(m.facet_volumes())),
                ((m.facet_volumes() - expected_facets).cwiseQuotient(expected_facets)).cwiseAbs().maxCoeff(), 1e-12);

  const IsogonicCatalog catalog = enumerate_isogonic(m);
  sheet.boolean(g, "catalog size", "5", std::to_string(catalog.entries.size()), catalog.entries.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    const std::string i = std::to_string(k);
    if (k >= catalog.entries.size()) {
      for (const char* what : {"L_", "F_", "pedal area a_", "antipedal area a~_"}) sheet.missing(g, what + i);
      continue;
    }
    const IsogonicEntry& e = catalog.entries[k];
    sheet.coords(g, "L_" + i, kL[k], e.conjugate_point.normalized_coords(), 1e-9);
    sheet.coords(g, "F_" + i, kF[k], e.isogonic_point.normalized_coords(), 1e-9);
    sheet.relative(g, "pedal area a_" + i, kPedalArea[k], e.pedal_area, 1e-6);
    sheet.relative(g, "antipedal area a~_" + i, kAntipedalArea[k], e.antipedal_area, 1e-6);
  }

  const BarycentricPoint incenter = classical_centers(m).incenter;
  const IsodynamicResult iso = isodynamic_points(incenter, m);
  if (iso.points.size() != 2) {
    sheet.missing(g, "J_1");
    sheet.missing(g, "J_2");
    return;
  }
  sheet.coords(g, "J_1", kJ1, iso.points[0].normalized_coords(), 1e-8);
  sheet.coords(g, "J_2", kJ2, iso.points[1].normalized_coords(), 1e-8);
  sheet.at_most(g, "J sphere membership residual", std::max(iso.residuals[0], iso.residuals[1]), 1e-8);
}

// 16 A^2 of a triangle from squared sides, exactly.
Rational heron16(const Rational& a2, const Rational& b2, const Rational& c2) {
  return 2 * (a2 * b2 + b2 * c2 + c2 * a2) - (a2 * a2 + b2 * b2 + c2 * c2);
}

void counter_example_rows(Sheet& sheet) {
  const std::string g = "counter-example tetrahedron";
  const std::vector<double> lengths{13, 11, 9, 12, 5, 11};
  const SimplexModel m = embed_from_edge_lengths(EdgeLengthTable::from_pairs(3, lengths));
  const std::array<double, 4> expected{6 * std::sqrt(21.0), 2.25 * std::sqrt(403.0), 2.25 * std::sqrt(51.0),
                                       6 * std::sqrt(105.0)};
  const std::array<const char*, 4> names{"6 sqrt 21", "(9/4) sqrt 403", "(9/4) sqrt 51", "6 sqrt 105"};
  for (int i = 0; i < 4; ++i)
    sheet.relative(g, std::string("facet area a_") + std::to_string(i + 1) + " = " + names[static_cast<std::size_t>(i)],
                   expected[static_cast<std::size_t>(i)], m.facet_volumes()(i), 1e-10);

  const Vector& a = m.facet_volumes();
  const YiuResult yiu = yiu_triangle_test(12, 11, 13, a(0), a(1), a(2));
  const std::vector<double> q_expected{3326952.0 / 4504043.0, 25180529.0 / 27024258.0, -18117983.0 / 27024258.0};
  sheet.coords(g, "Yiu witness Q", q_expected, yiu.q.normalized_coords(), 1e-12);

  // Same witness in exact arithmetic: squared facet areas are rational.
  auto sq = [](int x) { return Rational(x * x); };
  const Rational d12 = sq(13), d13 = sq(11), d14 = sq(9), d23 = sq(12), d24 = sq(5), d34 = sq(11);
  const Rational a1 = heron16(d23, d24, d34) / 16, a2 = heron16(d13, d14, d34) / 16, a3 = heron16(d12, d14, d24) / 16;
  const Rational s1 = d23 / a1, s2 = d13 / a2, s3 = d12 / a3;
  std::array<Rational, 3> q{d23 * (s1 - s2 - s3), d13 * (s2 - s3 - s1), d12 * (s3 - s1 - s2)};
  const Rational sum = q[0] + q[1] + q[2];
  for (auto& x : q) x /= sum;
  const std::array<Rational, 3> q_exact{Rational(3326952) / 4504043, Rational(25180529) / 27024258,
                                        Rational(-18117983) / 27024258};
  sheet.boolean(g, "Yiu witness Q, exact rationals",
                q_exact[0].str() + ", " + q_exact[1].str() + ", " + q_exact[2].str(),
                q[0].str() + ", " + q[1].str() + ", " + q[2].str(), q == q_exact);

  sheet.coords(g, "face circumcenter O", {73.0 / 210.0, 121.0 / 315.0, 169.0 / 630.0},
               yiu.circumcenter.normalized_coords(), 1e-12);
  sheet.boolean(g, "Q outside the face circumcircle", "d^2(Q,O) > R^2",
                sci(yiu.distance_sq) + " vs " + sci(yiu.circumradius_sq), yiu.outside);
  const IsodynamicResult iso = isodynamic_points(classical_centers(m).incenter, m);
  sheet.boolean(g, "isodynamic points", "none", std::to_string(iso.points.size()) + " found", iso.points.empty());
}

void fermat_rows(Sheet& sheet) {
  const std::string g = "fermat";
  const SimplexModel m = five_point_tetrahedron();
  std::mt19937 rng(20240601);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<BarycentricPoint> starts;
  for (int s = 0; s < 10; ++s) starts.push_back(BarycentricPoint::normalized(vec({u(rng), u(rng), u(rng), u(rng)})));

  double worst_increase = -INFINITY;
  std::optional<Vector> limit;
  for (WeiszfeldMethod method : {WeiszfeldMethod::q, WeiszfeldMethod::r}) {
    double err = 0.0;
    int converged = 0;
    for (const auto& start : starts) {
      FermatOptions opts;
      opts.method = method;
      const FermatResult r = fermat_point(m, start, opts);
      converged += r.trace.converged ? 1 : 0;
      const Vector c = r.point.normalized_coords();
      for (Eigen::Index i = 0; i < 4; ++i) err = std::max(err, std::abs(c(i) - kF[0][static_cast<std::size_t>(i)]));
      if (method == WeiszfeldMethod::q) {
        if (!limit) limit = m.bary_to_cart(r.point);
        const auto& obj = r.trace.objective_values;
        for (std::size_t k = 1; k < obj.size(); ++k) worst_increase = std::max(worst_increase, obj[k] - obj[k - 1]);
      }
    }
    const std::string name = std::string(method == WeiszfeldMethod::q ? "Q" : "R") + " iteration to F_0, 10 starts";
    sheet.boolean(g, name + ", converged", "10", std::to_string(converged), converged == 10);
    sheet.numeric(g, name + ", max coordinate error", "<= 1e-9", sci(err), err, 1e-9);
  }

  const Vector grad = total_distance_gradient(*limit, m);
  sheet.at_most(g, "gradient norm at the limit", grad.norm(), 1e-7);
  const double h = 1e-6 * m.diameter();
  double fd_err = 0.0;
  for (int k = 0; k < 3; ++k) {
    Vector e = Vector::Zero(3);
    e(k) = h;
    const double fd = (total_distance(m.cart_to_bary(*limit + e), m) - total_distance(m.cart_to_bary(*limit - e), m)) /
                      (2 * h);
    fd_err = std::max(fd_err, std::abs(fd - grad(k)));
  }
  sheet.at_most(g, "gradient vs finite differences", fd_err, 1e-5);
  sheet.at_most(g, "largest total distance increase along Q iterates", std::max(0.0, worst_increase), 1e-12);
}

// Torricelli construction: lines from each vertex to the apex of the
// equilateral triangle erected on the opposite side meet at an isogonic
// point (outward apexes for one, inward for the other).
Vector torricelli(const std::array<Vector, 3>& v, bool outward) {
  auto apex = [&](int i) {
    const Vector& b = v[static_cast<std::size_t>((i + 1) % 3)];
    const Vector& c = v[static_cast<std::size_t>((i + 2) % 3)];
    const Vector mid = 0.5 * (b + c);
    Vector n(2);
    n << -(c - b)(1), (c - b)(0);
    n *= std::sqrt(3.0) / 2.0;
    const bool away = n.dot(v[static_cast<std::size_t>(i)] - mid) < 0.0;
    return Vector(mid + ((away == outward) ? n : Vector(-n)));
  };
  const Vector d0 = apex(0) - v[0];
  const Vector d1 = apex(1) - v[1];
  Eigen::Matrix2d a;
  a << d0(0), -d1(0), d0(1), -d1(1);
  const Eigen::Vector2d t = a.colPivHouseholderQr().solve(Eigen::Vector2d(v[1] - v[0]));
  return v[0] + t(0) * d0;
}

double line_residual(const Vector& x, const Vector& a, const Vector& b) {
  const Vector u = (b - a).normalized();
  const Vector r = x - a;
  return (r - r.dot(u) * u).norm();
}

// Coordinate gap scaled by the size of the coordinates.
double scaled_gap(const Vector& a, const Vector& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()));
}

void triangle_rows(Sheet& sheet) {
  const std::string g = "triangle properties";
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double on_axis = 0, harmonic = 0, products = 0, pedal = 0, antipedal = 0, conj = 0;
  int one_inside = 0, pairs = 0, count = 0;
  while (count < 100) {
    std::array<Vector, 3> v{vec({u(rng), u(rng)}), vec({u(rng), u(rng)}), vec({u(rng), u(rng)})};
    const SimplexModel m = SimplexModel::from_vertices({v[0], v[1], v[2]});
    const Vector& s = m.facet_volumes();
    if (m.volume() < 0.05 * m.diameter() * m.diameter() || s.maxCoeff() / s.minCoeff() < 1.05) continue;
    ++count;
    const ClassicalCenters c = classical_centers(m);
    const IsodynamicResult iso = isodynamic_points(c.incenter, m);
    if (iso.points.size() != 2) continue;
    ++pairs;
    const Vector o = m.bary_to_cart(c.circumcenter);
    const Vector k = m.bary_to_cart(c.symmedian);
    const Vector j1 = m.bary_to_cart(iso.points[0]);
    const Vector j2 = m.bary_to_cart(iso.points[1]);
    const double diam = m.diameter();
    on_axis = std::max({on_axis, line_residual(j1, o, k) / diam, line_residual(j2, o, k) / diam});
    harmonic = std::max(harmonic, std::abs(cross_ratio(o, k, j1, j2) + 1.0));
    const double radius = (m.vertex(0) - o).norm();
    one_inside += (((j1 - o).norm() < radius) != ((j2 - o).norm() < radius)) ? 1 : 0;

    const std::array<Vector, 2> oracle{torricelli(v, true), torricelli(v, false)};
    for (std::size_t t = 0; t < 2; ++t) {
      const BarycentricPoint& j = iso.points[t];
      const Vector x = m.bary_to_cart(j);
      Vector prod(3);
      for (int i = 0; i < 3; ++i) prod(i) = (x - m.vertex(i)).norm() * s(i);
      products = std::max(products, (prod.maxCoeff() - prod.minCoeff()) / prod.mean());
      pedal = std::max(pedal, equiareal_deviation(pedal_simplex(j, m)));
      const BarycentricPoint f = m.cart_to_bary(oracle[t]);
      antipedal = std::max(antipedal, equiareal_deviation(antipedal_simplex(f, m)));
      const Vector cj = isogonal_conjugate(j, m).normalized_coords();
      conj = std::max(conj, std::min(scaled_gap(cj, m.cart_to_bary(oracle[0]).normalized_coords()),
                                     scaled_gap(cj, m.cart_to_bary(oracle[1]).normalized_coords())));
    }
  }
  sheet.boolean(g, "isodynamic pairs found", "100", std::to_string(pairs), pairs == 100);
  sheet.at_most(g, "J on line O K (residual / diameter)", on_axis, 1e-9);
  sheet.at_most(g, "(O,K;J_1,J_2) + 1", harmonic, 1e-7);
  sheet.boolean(g, "exactly one J inside the circumcircle", "100", std::to_string(one_inside), one_inside == 100);
  sheet.at_most(g, "d(J,A_i) d_jk spread", products, 1e-8);
  sheet.at_most(g, "pedal triangle of J side spread", pedal, 1e-8);
  sheet.at_most(g, "antipedal triangle of isogonic points side spread", antipedal, 1e-8);
  sheet.at_most(g, "isogonal conjugates of J vs isogonic points", conj, 1e-8);
}

void structural_rows(Sheet& sheet) {
  const std::string g = "structural invariants";
  std::mt19937 rng(11);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> mag(0.2, 1.5);
  double harmonic = 0, orthogonal = 0, orthology = 0, corr = 0, roundtrip = 0;
  int count = 0;
  while (count < 100) {
    const int n = 2 + count % 3;
    std::vector<Vector> verts;
    for (int i = 0; i <= n; ++i) {
      Vector x(n);
      for (int k = 0; k < n; ++k) x(k) = normal(rng);
      verts.push_back(x);
    }
    const SimplexModel m = SimplexModel::from_vertices(verts);
    if (std::pow(m.volume(), 1.0 / n) < 0.1 * m.diameter()) continue;
    ++count;
    // P with mixed signs; redraw points that sit nearly at infinity
    Vector pc(n + 1);
    do {
      for (int i = 0; i <= n; ++i) pc(i) = (rng() % 2 ? 1.0 : -1.0) * mag(rng);
    } while (std::abs(pc.sum()) < 0.1 * pc.cwiseAbs().maxCoeff());
    const BarycentricPoint p = BarycentricPoint::homogeneous(pc);
    const Sphere circ = circumsphere(m);

    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const ApollonianSphere s = apollonian_sphere(p, i, j, m);
        if (s.sphere.is_degenerate()) continue;
        harmonic = std::max(harmonic, std::abs(cross_ratio(m.vertex(i), m.vertex(j), m.bary_to_cart(s.p_ij),
                                                           m.bary_to_cart(s.p_ij_star)) + 1.0));
        const double r2 = s.sphere.radius * s.sphere.radius + circ.radius * circ.radius;
        orthogonal = std::max(orthogonal, std::abs((s.sphere.center - circ.center).squaredNorm() - r2) / r2);
      }

    const PedalResult polar = polar_simplex(p, 1.0, m);
    if (polar.simplex)
      orthology = std::max(orthology, (polar.simplex->cart_to_bary(m.bary_to_cart(p)).normalized_coords() -
                                       p.normalized_coords()).cwiseAbs().maxCoeff());

    corr = std::max({corr, normalized_distance(z_correspondent(p, BarycentricPoint::centroid(n + 1)), p),
                     normalized_distance(z_correspondent(p, p), BarycentricPoint::centroid(n + 1))});

    try {
      const PedalResult anti = antipedal_simplex(p, m);
      if (anti.simplex) {
        const PedalResult back = pedal_simplex(anti.simplex->cart_to_bary(m.bary_to_cart(p)), *anti.simplex);
        for (int i = 0; i <= n; ++i)
          roundtrip = std::max(roundtrip, (back.points[static_cast<std::size_t>(i)] - m.vertex(i)).norm() / m.diameter());
      }
    } catch (const GeometryError&) {
    }
  }
  sheet.at_most(g, "(A_i,A_j;P_ij,P_ij*) + 1", harmonic, 1e-12);
  sheet.at_most(g, "Apollonian sphere vs circumsphere orthogonality", orthogonal, 1e-8);
  sheet.at_most(g, "polar simplex orthology coordinates", orthology, 1e-10);
  sheet.at_most(g, "P#G* = P and P#P* = G", corr, 1e-12);
  sheet.at_most(g, "pedal of antipedal simplex returns the vertices", roundtrip, 1e-8);

  // Yiu verdict against direct circle intersection of S_12 and S_13.
  std::uniform_real_distribution<double> w(0.5, 2.0);
  int agree = 0, instances = 0;
  while (instances < 50) {
    std::array<Vector, 3> v{vec({normal(rng), normal(rng)}), vec({normal(rng), normal(rng)}),
                            vec({normal(rng), normal(rng)})};
    const double d12 = (v[0] - v[1]).norm(), d13 = (v[0] - v[2]).norm(), d23 = (v[1] - v[2]).norm();
    const double area = 0.5 * std::abs((v[1] - v[0])(0) * (v[2] - v[0])(1) - (v[1] - v[0])(1) * (v[2] - v[0])(0));
    if (area < 0.05 * std::max({d12, d13, d23}) * std::max({d12, d13, d23})) continue;
    const std::array<double, 3> wt{w(rng), w(rng), w(rng)};
    ++instances;
    auto circle = [&](int i, int j) {
      const double wi = wt[static_cast<std::size_t>(i)] * wt[static_cast<std::size_t>(i)];
      const double wj = wt[static_cast<std::size_t>(j)] * wt[static_cast<std::size_t>(j)];
      const Vector c = (wj * v[static_cast<std::size_t>(j)] - wi * v[static_cast<std::size_t>(i)]) / (wj - wi);
      const double r = std::sqrt(wi * wj) * (v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)]).norm() /
                       std::abs(wj - wi);
      return std::make_pair(c, r);
    };
    const auto [c1, r1] = circle(0, 1);
    const auto [c2, r2] = circle(0, 2);
    const double gap = (c1 - c2).norm();
    const bool meet = std::abs(r1 - r2) <= gap && gap <= r1 + r2;
    const bool outside = yiu_triangle_test(d23, d13, d12, wt[0], wt[1], wt[2]).outside;
    agree += (meet != outside) ? 1 : 0;
  }
  sheet.boolean(g, "Yiu verdict vs circle intersection", "50 of 50", std::to_string(agree) + " of 50", agree == 50);
}

}  // namespace

CommandResult cmd_verify_paper(const Options& opts) {
  Sheet sheet(opts.tolerance);
  five_point_rows(sheet);
  counter_example_rows(sheet);
  fermat_rows(sheet);
  triangle_rows(sheet);
  structural_rows(sheet);

  Json rows = Json::array();
  int failed = 0;
  for (const Row& r : sheet.rows()) {
    Json row{{"group", r.group}, {"check", r.check}, {"expected", r.expected}, {"computed", r.computed}};
    if (r.numeric) {
      row["error"] = r.error;
      row["tolerance"] = r.tolerance;
    }
    row["pass"] = r.pass;
    rows.push_back(std::move(row));
    failed += r.pass ? 0 : 1;
  }
  Json options = Json::object();
  if (opts.tolerance) options["tolerance"] = *opts.tolerance;
  CommandResult result{failed ? kExitVerifyFailed : kExitOk,
                       Json{{"command", "verify-paper"},
                            {"options", std::move(options)},
                            {"rows", std::move(rows)},
                            {"checked", sheet.rows().size()},
                            {"failed", failed}},
                       {}};
  if (failed) result.diagnostic = "verify-paper: " + std::to_string(failed) + " row(s) failed";
  return result;
}

std::string render_verify(const Json& report) {
  std::ostringstream out;
  std::string group;
  for (const auto& row : report["rows"]) {
    if (row["group"] != group) {
      group = row["group"].get<std::string>();
      out << (out.tellp() > 0 ? "\n" : "") << group << '\n';
    }
    out << "  " << (row["pass"].get<bool>() ? "ok  " : "FAIL") << "  " << row["check"].get<std::string>() << '\n';
    out << "        expected  " << row["expected"].get<std::string>() << '\n';
    out << "        computed  " << row["computed"].get<std::string>() << '\n';
    if (row.contains("error"))
      out << "        error     " << (row["error"].is_number() ? sci(row["error"].get<double>()) : "n/a")
          << "  (tolerance "
          << sci(row["tolerance"].get<double>()) << ")\n";
  }
  out << '\n' << report["checked"].get<std::size_t>() << " rows checked, " << report["failed"].get<int>()
      << " failed\n";
  if (report["failed"].get<int>() > 0) {
    out << "failing rows:\n";
    for (const auto& row : report["rows"])
      if (!row["pass"].get<bool>())
        out << "  " << row["group"].get<std::string>() << ": " << row["check"].get<std::string>() << '\n';
  }
  return out.str();
}

}  // namespace simplex::cli
