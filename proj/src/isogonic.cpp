#include "simplex/isogonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <tuple>

#include "simplex/pedal.hpp"

namespace simplex {

namespace {

constexpr double kDivergence = 1e8;
constexpr int kRisingSteps = 5;
constexpr int kLineSearchSteps = 40;

// Relative equiareal defects of the pedal simplex of the Cartesian point x.
Vector equiareal_defects(const Vector& x, const SimplexModel& model) {
  const Vector a = facet_volumes_of(pedal_simplex(model.cart_to_bary(x), model).points);
  const double mean = a.mean();
  if (!(mean > 0.0)) throw GeometryError(ErrorCode::Degenerate, "pedal simplex collapsed");
  return (a.tail(a.size() - 1).array() - a(0)).matrix() / mean;
}

// Canonical ordering: fewer negative coordinates first, then by the position
// of the first negative coordinate, then lexicographically.
auto sort_key(const BarycentricPoint& p) {
  const Vector c = p.normalized_coords();
  int negatives = 0;
  int first_negative = static_cast<int>(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (c(i) < 0.0) {
      ++negatives;
      first_negative = std::min(first_negative, static_cast<int>(i));
    }
  }
  return std::make_tuple(negatives, first_negative, std::vector<double>(c.data(), c.data() + c.size()));
}

}  // namespace

const char* to_string(PedalIterationStatus status) {
  switch (status) {
    case PedalIterationStatus::converged: return "converged";
    case PedalIterationStatus::max_iterations: return "max_iterations";
    case PedalIterationStatus::degenerate_pedal: return "degenerate_pedal";
    case PedalIterationStatus::diverged: return "diverged";
  }
  return "unknown";
}

BarycentricPoint isogonal_conjugate(const BarycentricPoint& p, const SimplexModel& model) {
  if (p.size() != model.vertex_count())
    throw GeometryError(ErrorCode::InvalidArgument, "coordinate count must match vertex count");
  if (p.has_zero_coordinate())
    throw GeometryError(ErrorCode::ZeroCoordinate, "isogonal conjugate needs nonzero coordinates");
  const Vector& a = model.facet_volumes();
  return BarycentricPoint::homogeneous(a.cwiseProduct(a).cwiseQuotient(p.coords()));
}

PedalIterationResult pedal_equiareal_iteration(const BarycentricPoint& start,
                                               const SimplexModel& model,
                                               const PedalIterationOptions& options) {
  PedalIterationResult result{start.as_normalized(), PedalIterationStatus::max_iterations, 0, {},
                              options.damping};
  const double diameter = model.diameter();

  Vector x = model.bary_to_cart(start);
  double previous = std::numeric_limits<double>::infinity();
  int rising = 0;
  for (int it = 0; it <= options.max_iterations; ++it) {
    result.iterations = it;
    result.point = model.cart_to_bary(x);
    const PedalResult pedal = pedal_simplex(result.point, model);
    if (pedal.degenerate()) {
      result.status = PedalIterationStatus::degenerate_pedal;
      return result;
    }
    const Vector& a = pedal.simplex->facet_volumes();
    Vector centroid = Vector::Zero(model.dimension());
    Vector incenter = Vector::Zero(model.dimension());
    for (std::size_t k = 0; k < pedal.points.size(); ++k) {
      centroid += pedal.points[k];
      incenter += a(static_cast<Eigen::Index>(k)) * pedal.points[k];
    }
    centroid /= static_cast<double>(pedal.points.size());
    incenter /= a.sum();

    const Vector shift = centroid - incenter;
    const double residual = shift.norm();
    result.residuals.push_back(residual);
    if (residual < options.tolerance * diameter) {
      result.status = PedalIterationStatus::converged;
      return result;
    }
    rising = residual > previous ? rising + 1 : 0;
    if (rising >= kRisingSteps) {
      result.final_damping *= 0.5;
      rising = 0;
    }
    previous = residual;
    x += result.final_damping * shift;
    if (!x.allFinite() || x.norm() > kDivergence * diameter) {
      result.status = PedalIterationStatus::diverged;
      return result;
    }
  }
  result.status = PedalIterationStatus::max_iterations;
  return result;
}

PedalIterationResult equiareal_newton(const BarycentricPoint& start, const SimplexModel& model,
                                      int max_iterations, double tolerance) {
  PedalIterationResult result{start.as_normalized(), PedalIterationStatus::max_iterations, 0, {}, 1.0};
  const double diameter = model.diameter();
  const int n = model.dimension();
  Vector x = model.bary_to_cart(start);
  try {
    for (int it = 0; it <= max_iterations; ++it) {
      result.iterations = it;
      result.point = model.cart_to_bary(x);
      const Vector f = equiareal_defects(x, model);
      const double residual = f.norm();
      result.residuals.push_back(residual);
      if (residual < tolerance) {
        result.status = PedalIterationStatus::converged;
        return result;
      }
      if (it == max_iterations) break;

      const double h = 1e-7 * std::max(diameter, x.norm());
      Matrix jac(n, n);
      for (int k = 0; k < n; ++k) {
        Vector e = Vector::Zero(n);
        e(k) = h;
        jac.col(k) = (equiareal_defects(x + e, model) - equiareal_defects(x - e, model)) / (2.0 * h);
      }
      const Vector dx = jac.fullPivLu().solve(-f);
      double step = 1.0;
      bool improved = false;
      for (int ls = 0; ls < kLineSearchSteps && !improved; ++ls, step *= 0.5) {
        const Vector y = x + step * dx;
        if (y.allFinite() && equiareal_defects(y, model).norm() < residual) {
          x = y;
          improved = true;
        }
      }
      result.final_damping = step;
      if (!improved) return result;
      if (x.norm() > kDivergence * diameter) {
        result.status = PedalIterationStatus::diverged;
        return result;
      }
    }
  } catch (const GeometryError&) {
    result.status = PedalIterationStatus::degenerate_pedal;
  }
  return result;
}

const char* to_string(SeedMethod method) {
  switch (method) {
    case SeedMethod::pedal_iteration: return "pedal_iteration";
    case SeedMethod::newton_from_limit: return "newton_from_limit";
    case SeedMethod::newton_from_seed: return "newton_from_seed";
  }
  return "unknown";
}

IsogonicCheck is_isogonic(const BarycentricPoint& p, const SimplexModel& model, double tol) {
  IsogonicCheck check;
  try {
    const PedalResult anti = antipedal_simplex(p, model);
    check.deviation = equiareal_deviation(anti);
    check.isogonic = check.deviation <= tol;
    if (anti.degenerate()) check.diagnostic = "antipedal simplex is degenerate";
  } catch (const GeometryError& e) {
    check.deviation = std::numeric_limits<double>::infinity();
    check.diagnostic = e.what();
  }
  return check;
}

std::vector<BarycentricPoint> default_isogonic_seeds(int vertex_count) {
  std::vector<BarycentricPoint> seeds{BarycentricPoint::centroid(vertex_count)};
  for (int k = 0; k < vertex_count; ++k) {
    Vector c = Vector::Ones(vertex_count);
    c(k) = -1.0;
    seeds.push_back(BarycentricPoint::homogeneous(std::move(c)));
  }
  return seeds;
}

IsogonicCatalog enumerate_isogonic(const SimplexModel& model, const EnumerateOptions& options) {
  std::vector<BarycentricPoint> seeds;
  if (options.use_default_seeds) seeds = default_isogonic_seeds(model.vertex_count());
  seeds.insert(seeds.end(), options.extra_seeds.begin(), options.extra_seeds.end());

  IsogonicCatalog catalog;

  // Conjugates a converged limit, verifies and records it.
  auto absorb = [&](SeedOutcome outcome, const PedalIterationResult& run) {
    outcome.status = run.status;
    outcome.iterations = run.iterations;
    try {
      if (!run.converged()) {
        outcome.note = std::string("iteration ended: ") + to_string(run.status);
        catalog.seeds.push_back(std::move(outcome));
        return;
      }
      const BarycentricPoint limit = run.point.as_normalized();
      const auto match = std::find_if(catalog.entries.begin(), catalog.entries.end(), [&](const auto& e) {
        return normalized_distance(e.conjugate_point, limit) <= options.dedup_threshold;
      });
      if (match != catalog.entries.end()) {
        outcome.entry_index = static_cast<int>(match - catalog.entries.begin());
        outcome.note = "duplicate limit";
        catalog.seeds.push_back(std::move(outcome));
        return;
      }

      const PedalResult pedal = pedal_simplex(limit, model);
      const double pedal_dev = equiareal_deviation(pedal);
      if (pedal_dev > options.verify_tolerance) {
        outcome.note = "limit pedal simplex not equiareal";
        catalog.seeds.push_back(std::move(outcome));
        return;
      }
      const BarycentricPoint isogonic = isogonal_conjugate(limit, model).as_normalized();
      const IsogonicCheck check = is_isogonic(isogonic, model, options.verify_tolerance);
      if (!check.isogonic) {
        outcome.note = "conjugate failed isogonic verification";
        if (!check.diagnostic.empty()) outcome.note += ": " + check.diagnostic;
        catalog.seeds.push_back(std::move(outcome));
        return;
      }
      const PedalResult anti = antipedal_simplex(isogonic, model);
      catalog.entries.push_back(IsogonicEntry{
          limit,
          isogonic,
          pedal.facet_volumes().mean(),
          anti.facet_volumes().mean(),
          pedal_dev,
          check.deviation,
          outcome.seed_index,
          run.iterations,
      });
      outcome.entry_index = static_cast<int>(catalog.entries.size()) - 1;
    } catch (const GeometryError& e) {
      outcome.note = e.what();
    }
    catalog.seeds.push_back(std::move(outcome));
  };

  for (std::size_t s = 0; s < seeds.size(); ++s) {
    const int index = static_cast<int>(s);
    auto outcome = [&](SeedMethod method) {
      return SeedOutcome{seeds[s], index, method, PedalIterationStatus::max_iterations, 0, -1, {}};
    };
    std::optional<PedalIterationResult> attempt;
    try {
      attempt = pedal_equiareal_iteration(seeds[s], model, options.iteration);
    } catch (const GeometryError& e) {
      SeedOutcome failed = outcome(SeedMethod::pedal_iteration);
      failed.note = e.what();
      catalog.seeds.push_back(std::move(failed));
      continue;
    }
    const PedalIterationResult& run = *attempt;
    absorb(outcome(SeedMethod::pedal_iteration), run);
    if (run.converged() || !options.newton_fallback) continue;

    // The pedal iteration repels from some equiareal points; Newton from the
    // stalled iterate and from the seed itself usually reaches them.
    if (run.status == PedalIterationStatus::max_iterations)
      absorb(outcome(SeedMethod::newton_from_limit), equiareal_newton(run.point, model));
    absorb(outcome(SeedMethod::newton_from_seed), equiareal_newton(seeds[s], model));
  }

  std::vector<int> order(catalog.entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int l, int r) {
    return sort_key(catalog.entries[static_cast<std::size_t>(l)].isogonic_point) <
           sort_key(catalog.entries[static_cast<std::size_t>(r)].isogonic_point);
  });
  std::vector<int> new_index(order.size());
  std::vector<IsogonicEntry> sorted;
  sorted.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    sorted.push_back(catalog.entries[static_cast<std::size_t>(order[k])]);
  }
  catalog.entries = std::move(sorted);
  for (auto& seed : catalog.seeds)
    if (seed.entry_index >= 0) seed.entry_index = new_index[static_cast<std::size_t>(seed.entry_index)];
  return catalog;
}

TriadCheck triad_angle_check(const BarycentricPoint& p, const SimplexModel& model, double tol) {
  if (model.dimension() != 3)
    throw GeometryError(ErrorCode::InvalidArgument, "triad check is defined for tetrahedra");
  const Vector x = model.bary_to_cart(p);
  std::array<Vector, 4> dirs;
  for (int i = 0; i < 4; ++i) {
    const Vector u = model.vertex(i) - x;
    if (u.norm() <= 1e-13 * model.diameter())
      throw GeometryError(ErrorCode::AtVertex, "point coincides with a vertex");
    dirs[static_cast<std::size_t>(i)] = u.normalized();
  }
  auto line_angle = [&](int i, int j) {
    const double c = std::abs(dirs[static_cast<std::size_t>(i)].dot(dirs[static_cast<std::size_t>(j)]));
    return std::acos(std::min(1.0, c));
  };

  TriadCheck check;
  for (int skip = 3; skip >= 0; --skip) {
    std::array<int, 3> v{};
    for (int k = 0, m = 0; k < 4; ++k)
      if (k != skip) v[static_cast<std::size_t>(m++)] = k;
    std::array<double, 3> t{line_angle(v[0], v[1]), line_angle(v[0], v[2]), line_angle(v[1], v[2])};
    std::sort(t.begin(), t.end());
    check.triads.push_back(t);
  }
  for (const auto& t : check.triads)
    for (std::size_t m = 0; m < 3; ++m)
      check.spread = std::max(check.spread, std::abs(t[m] - check.triads.front()[m]));
  check.congruent = check.spread <= tol;
  return check;
}

}  // namespace simplex
