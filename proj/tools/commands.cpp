#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"
#include "simplex/apollonian.hpp"
#include "simplex/fermat.hpp"
#include "simplex/isogonic.hpp"
#include "simplex/pedal.hpp"

namespace simplex::cli {

namespace {

double relative_spread(const Vector& v) {
  const double mean = v.cwiseAbs().mean();
  return mean > 0.0 ? (v.maxCoeff() - v.minCoeff()) / mean : 0.0;
}

BarycentricPoint user_point(const std::string& text, const SimplexModel& model, const std::string& what) {
  const Vector c = parse_coordinates(text, what);
  if (c.size() != model.vertex_count())
    throw InputError(what + ": expected " + std::to_string(model.vertex_count()) + " coordinates, got " +
                     std::to_string(c.size()));
  return BarycentricPoint::homogeneous(c);
}

std::string read_text(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError(path + ": cannot open file");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Json json_coords(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

void add(Json& report, Json item) { report["results"].push_back(std::move(item)); }

// Zero-padded coordinates of a point of the face spanned by the first
// vertices, as a point of the whole simplex.
BarycentricPoint lift(const BarycentricPoint& face_point, int vertex_count) {
  Vector c = Vector::Zero(vertex_count);
  c.head(face_point.size()) = face_point.normalized_coords();
  return BarycentricPoint::normalized(c);
}

}  // namespace

CommandResult cmd_centers(const Document& doc, const Options&) {
  const SimplexModel& m = doc.model;
  CommandResult result{kExitOk, make_report("centers", doc, Json::object()), {}};
  Json& report = result.report;
  const ClassicalCenters c = classical_centers(m);
  const Sphere circ = circumsphere(m);
  const int count = m.vertex_count();

  add(report, values_item("facet volumes", m.facet_volumes()));
  add(report, scalar_item("volume", m.volume()));
  add(report, scalar_item("circumradius", circ.radius));

  Vector mean = Vector::Zero(m.dimension());
  for (const auto& v : m.vertices()) mean += v;
  mean /= count;
  add(report, point_item("G (centroid)", c.centroid, (m.bary_to_cart(c.centroid) - mean).norm() / m.diameter(),
                         "distance to the vertex average / diameter"));

  const Vector xi = m.bary_to_cart(c.incenter);
  const Vector xk = m.bary_to_cart(c.symmedian);
  Vector to_facets_i(count), to_facets_k(count), to_vertices(count);
  for (int i = 0; i < count; ++i) {
    to_facets_i(i) = std::abs(m.facet_plane(i).signed_distance(xi));
    to_facets_k(i) = std::abs(m.facet_plane(i).signed_distance(xk)) / m.facet_volumes()(i);
    to_vertices(i) = (circ.center - m.vertex(i)).norm();
  }
  add(report, point_item("I (incenter)", c.incenter, relative_spread(to_facets_i),
                         "relative spread of the distances to the facets"));
  add(report, point_item("K (symmedian point)", c.symmedian, relative_spread(to_facets_k),
                         "relative spread of facet distance / facet volume"));
  add(report, point_item("O (circumcenter)", c.circumcenter, relative_spread(to_vertices),
                         "relative spread of the distances to the vertices"));

  if (m.dimension() >= 3) {
    for (int k = 0; k < count; ++k) {
      std::vector<int> face;
      for (int i = 0; i < count; ++i)
        if (i != k) face.push_back(i);
      const SimplexModel sub = embed_from_edge_lengths(m.edges().sub_table(face));
      const Vector local = classical_centers(sub).circumcenter.normalized_coords();
      Vector full = Vector::Zero(count);
      for (std::size_t r = 0; r < face.size(); ++r) full(face[r]) = local(static_cast<Eigen::Index>(r));
      const BarycentricPoint o = BarycentricPoint::normalized(full);
      const Vector x = m.bary_to_cart(o);
      Vector dist(static_cast<Eigen::Index>(face.size()));
      for (std::size_t r = 0; r < face.size(); ++r) dist(static_cast<Eigen::Index>(r)) = (x - m.vertex(face[r])).norm();
      add(report, point_item("O of the facet opposite A_" + std::to_string(k + 1), o, relative_spread(dist),
                             "relative spread of the distances to the facet vertices"));
    }
  }
  return result;
}

CommandResult cmd_isodynamic(const Document& doc, const Options& opts) {
  const SimplexModel& m = doc.model;
  Json options = Json::object();
  if (opts.point) options["point"] = *opts.point;
  CommandResult result{kExitOk, make_report("isodynamic", doc, std::move(options)), {}};
  Json& report = result.report;

  const ClassicalCenters centers = classical_centers(m);
  const BarycentricPoint p = opts.point ? user_point(*opts.point, m, "--point") : centers.incenter;
  add(report, point_item("P", p, 0.0, "input"));

  const IsodynamicResult iso = isodynamic_points(p, m);
  const Sphere circ = circumsphere(m);
  for (std::size_t k = 0; k < iso.points.size(); ++k) {
    Json item = point_item("J_" + std::to_string(k + 1), iso.points[k], iso.residuals[k],
                           "max relative Apollonian sphere membership defect");
    const double r = (m.bary_to_cart(iso.points[k]) - circ.center).norm();
    item["note"] = r < circ.radius ? "inside the circumsphere" : "outside the circumsphere";
    add(report, std::move(item));
  }
  if (iso.axis_direction.norm() > 0.0) add(report, values_item("axis direction (Cartesian)", iso.axis_direction));
  for (const auto& note : iso.notes) add(report, text_item("note", note));

  if (iso.points.empty()) {
    add(report, text_item("verdict", "none exist: no point lies on all Apollonian spheres"));
    // Yiu's witness on the face A_1 A_2 A_3, where S_12, S_13, S_23 cut out
    // the Apollonian circles with weights |p_1|, |p_2|, |p_3|.
    const EdgeLengthTable& d = m.edges();
    const YiuResult yiu = yiu_triangle_test(d(1, 2), d(0, 2), d(0, 1), std::abs(p[0]), std::abs(p[1]),
                                            std::abs(p[2]));
    const double margin = yiu.distance_sq - yiu.circumradius_sq;
    if (yiu.q.is_finite())
      add(report, point_item("Q (witness on face A_1 A_2 A_3)", lift(yiu.q, m.vertex_count()), margin,
                             "squared distance to the face circumcenter minus squared circumradius"));
    add(report, point_item("O of face A_1 A_2 A_3", lift(yiu.circumcenter, m.vertex_count()), 0.0,
                           "face circumcenter"));
    add(report, text_item("witness verdict",
                          yiu.outside ? "outside the face circumcircle: S_12, S_13, S_23 have no common point"
                                      : "inside the face circumcircle: S_12, S_13, S_23 meet"));
  }
  return result;
}

CommandResult cmd_fermat(const Document& doc, const Options& opts) {
  const SimplexModel& m = doc.model;
  const auto method = parse_weiszfeld_method(opts.method);
  if (!method) throw InputError("--method: expected q, r or classic, got '" + opts.method + "'");
  FermatOptions fo;
  fo.method = *method;
  fo.tolerance = opts.tolerance.value_or(doc.tolerance.value_or(fo.tolerance));
  fo.max_iterations = opts.max_iterations.value_or(doc.max_iterations.value_or(fo.max_iterations));
  const BarycentricPoint start =
      opts.start ? user_point(*opts.start, m, "--start") : BarycentricPoint::centroid(m.vertex_count());

  Json options{{"method", to_string(fo.method)}, {"tolerance", fo.tolerance}, {"max_iterations", fo.max_iterations}};
  if (opts.start) options["start"] = *opts.start;
  CommandResult result{kExitOk, make_report("fermat", doc, std::move(options)), {}};
  Json& report = result.report;

  const FermatResult fr = fermat_point(m, start, fo);
  const Vector x = m.bary_to_cart(fr.point);
  Json item = fr.vertex ? point_item("F (Fermat-Torricelli point)", fr.point, vertex_optimality_norm(m, *fr.vertex),
                                     "norm of the sum of unit edge vectors at the vertex, at most 1")
                        : point_item("F (Fermat-Torricelli point)", fr.point,
                                     total_distance_gradient(x, m).norm(), "gradient norm of the total distance");
  item["iterations"] = fr.trace.iterations_used;
  if (fr.vertex) item["note"] = "vertex optimum at A_" + std::to_string(*fr.vertex + 1);
  add(report, std::move(item));
  add(report, scalar_item("total distance", total_distance(fr.point, m)));
  add(report, text_item("converged", fr.trace.converged ? "yes" : "no"));

  Json rows = Json::array();
  for (WeiszfeldMethod other : {WeiszfeldMethod::q, WeiszfeldMethod::r, WeiszfeldMethod::classic}) {
    FermatOptions oo = fo;
    oo.method = other;
    try {
      const FermatResult r = fermat_point(m, start, oo);
      const double gap = (r.point.normalized_coords() - fr.point.normalized_coords()).cwiseAbs().maxCoeff();
      rows.push_back(Json::array({to_string(other), r.trace.iterations_used, r.trace.converged ? "yes" : "no",
                                  total_distance(r.point, m), gap}));
    } catch (const GeometryError& e) {
      rows.push_back(Json::array({to_string(other), 0, std::string("error: ") + e.what(), nullptr, nullptr}));
    }
  }
  add(report, table_item("method comparison",
                         {"method", "iterations", "converged", "total distance", "max coordinate gap"},
                         std::move(rows)));

  if (opts.trace) {
    Json iterates = Json::array();
    for (const auto& it : fr.trace.iterates) iterates.push_back(json_coords(it));
    report["trace"] = Json{{"method", to_string(fr.trace.method)},
                           {"converged", fr.trace.converged},
                           {"iterations", fr.trace.iterations_used},
                           {"iterates", std::move(iterates)},
                           {"objective", fr.trace.objective_values}};
  }
  if (!fr.trace.converged) {
    result.exit_code = kExitNoConvergence;
    result.diagnostic = "fermat: no convergence within " + std::to_string(fo.max_iterations) + " iterations";
    report["warnings"].push_back(result.diagnostic);
  }
  return result;
}

CommandResult cmd_isogonic(const Document& doc, const Options& opts) {
  const SimplexModel& m = doc.model;
  EnumerateOptions eo;
  eo.iteration.tolerance = opts.tolerance.value_or(doc.tolerance.value_or(eo.iteration.tolerance));
  eo.iteration.max_iterations =
      opts.budget.value_or(opts.max_iterations.value_or(doc.max_iterations.value_or(eo.iteration.max_iterations)));
  if (opts.seeds) {
    const std::string text = !opts.seeds->empty() && opts.seeds->front() == '[' ? *opts.seeds : read_text(*opts.seeds);
    for (const Vector& s : parse_coordinate_lists(text, "--seeds")) {
      if (s.size() != m.vertex_count())
        throw InputError("--seeds: every seed needs " + std::to_string(m.vertex_count()) + " coordinates");
      eo.extra_seeds.push_back(BarycentricPoint::homogeneous(s));
    }
  }

  Json options{{"tolerance", eo.iteration.tolerance}, {"budget", eo.iteration.max_iterations}};
  if (opts.seeds) options["extra_seeds"] = eo.extra_seeds.size();
  CommandResult result{kExitOk, make_report("isogonic", doc, std::move(options)), {}};
  Json& report = result.report;

  const IsogonicCatalog catalog = enumerate_isogonic(m, eo);
  Json areas = Json::array();
  for (std::size_t k = 0; k < catalog.entries.size(); ++k) {
    const IsogonicEntry& e = catalog.entries[k];
    const std::string idx = std::to_string(k);
    std::string method = "pedal_iteration";
    for (const auto& s : catalog.seeds)
      if (s.entry_index == static_cast<int>(k) && s.note.empty()) method = to_string(s.method);

    Json l = point_item("L_" + idx + " (equiareal pedal simplex)", e.conjugate_point, e.pedal_deviation,
                        "pedal facet volume deviation (max-min)/mean");
    l["iterations"] = e.iterations;
    add(report, std::move(l));
    add(report, point_item("F_" + idx + " (isogonic point)", e.isogonic_point, e.antipedal_deviation,
                           "antipedal facet volume deviation (max-min)/mean"));
    areas.push_back(Json::array({static_cast<int>(k), e.pedal_area, e.antipedal_area, e.seed_index, method}));
  }
  add(report, table_item("facet areas", {"k", "pedal a_k", "antipedal a~_k", "seed", "found by"}, std::move(areas)));

  Json seeds = Json::array();
  std::vector<bool> productive;
  for (const auto& s : catalog.seeds) {
    seeds.push_back(Json::array({s.seed_index, to_string(s.method), to_string(s.status), s.iterations,
                                 s.entry_index >= 0 ? Json(s.entry_index) : Json("-"),
                                 s.note.empty() ? std::string("-") : s.note}));
    if (static_cast<std::size_t>(s.seed_index) >= productive.size())
      productive.resize(static_cast<std::size_t>(s.seed_index) + 1, false);
    if (s.entry_index >= 0) productive[static_cast<std::size_t>(s.seed_index)] = true;
  }
  add(report, table_item("seed attempts", {"seed", "method", "status", "iterations", "entry", "note"},
                         std::move(seeds)));
  const auto idle = std::count(productive.begin(), productive.end(), false);
  if (idle > 0) report["warnings"].push_back(std::to_string(idle) + " seed(s) reached no catalog entry");
  if (catalog.entries.empty()) {
    result.exit_code = kExitNoConvergence;
    result.diagnostic = "isogonic: no seed converged to a verified isogonic point";
  }
  return result;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Centers of simplices from barycentric coordinates", "simplex-centers"};
  app.require_subcommand(1);

  Options opts;
  std::string doc_path = "-";
  bool json = false;
  auto doc_args = [&](CLI::App* sub) {
    sub->add_option("document", doc_path, "Simplex document (JSON); '-' or omitted reads stdin");
    sub->add_flag("--json", json, "Machine-readable output");
  };
  auto iteration_args = [&](CLI::App* sub) {
    sub->add_option("--tolerance", opts.tolerance, "Convergence tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", opts.max_iterations, "Iteration limit")->check(CLI::PositiveNumber);
  };

  CLI::App* centers = app.add_subcommand("centers", "Centroid, incenter, symmedian point, circumcenter");
  doc_args(centers);
  CLI::App* isodynamic = app.add_subcommand("isodynamic", "Generalized isodynamic points");
  doc_args(isodynamic);
  isodynamic->add_option("--point", opts.point, "Barycentric point P (default: incenter)");
  CLI::App* fermat = app.add_subcommand("fermat", "Fermat-Torricelli point");
  doc_args(fermat);
  iteration_args(fermat);
  fermat->add_option("--method", opts.method, "q, r or classic")->capture_default_str();
  fermat->add_option("--start", opts.start, "Starting point (default: centroid)");
  fermat->add_flag("--trace", opts.trace, "Include the full iteration trace");
  CLI::App* isogonic = app.add_subcommand("isogonic", "Isogonic points from the pedal iteration");
  doc_args(isogonic);
  iteration_args(isogonic);
  isogonic->add_option("--seeds", opts.seeds, "Extra seeds: inline JSON list of points or a file");
  isogonic->add_option("--budget", opts.budget, "Pedal iteration steps per seed")->check(CLI::PositiveNumber);
  CLI::App* verify = app.add_subcommand("verify-paper", "Recompute the published values and property checks");
  verify->add_option("--tolerance", opts.tolerance, "Replace every numeric tolerance")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  CommandResult result;
  try {
    if (verify->parsed()) {
      result = cmd_verify_paper(opts);
    } else {
      const std::string text =
          doc_path == "-" ? std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>())
                          : read_text(doc_path);
      const Document doc = parse_document(text);
      if (centers->parsed()) result = cmd_centers(doc, opts);
      else if (isodynamic->parsed()) result = cmd_isodynamic(doc, opts);
      else if (fermat->parsed()) result = cmd_fermat(doc, opts);
      else result = cmd_isogonic(doc, opts);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const GeometryError& e) {
    err << (e.code() == ErrorCode::InvalidArgument ? "input error: " : "geometric error: ") << e.what() << '\n';
    return e.code() == ErrorCode::InvalidArgument ? kExitInput : kExitGeometry;
  }

  if (json) out << result.report.dump(2) << '\n';
  else out << (verify->parsed() ? render_verify(result.report) : render_human(result.report));
  if (!result.diagnostic.empty()) err << result.diagnostic << '\n';
  return result.exit_code;
}

}  // namespace simplex::cli
