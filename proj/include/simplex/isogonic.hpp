#pragma once

#include <array>
#include <string>
#include <vector>

#include "simplex/core.hpp"

namespace simplex {

/// [a_1^2/p_1 : ... : a_{n+1}^2/p_{n+1}] with a_i the facet volumes. For a
/// triangle this is the classical isogonal conjugate. Throws ZeroCoordinate.
BarycentricPoint isogonal_conjugate(const BarycentricPoint& p, const SimplexModel& model);

struct PedalIterationOptions {
  /// Stop when |G_pedal - I_pedal| < tolerance * diameter.
  double tolerance = 1e-14;
  int max_iterations = 20000;
  /// Step factor on G_pedal - I_pedal; halved when the residual grows for
  /// five consecutive steps.
  double damping = 1.0;
};

enum class PedalIterationStatus { converged, max_iterations, degenerate_pedal, diverged };

const char* to_string(PedalIterationStatus status);

struct PedalIterationResult {
  BarycentricPoint point;
  PedalIterationStatus status = PedalIterationStatus::max_iterations;
  int iterations = 0;
  /// |G_pedal - I_pedal| at every iterate, the start included.
  std::vector<double> residuals;
  double final_damping = 1.0;

  bool converged() const { return status == PedalIterationStatus::converged; }
};

/// Fixed-point iteration P <- P + (G_pedal - I_pedal), with G_pedal and
/// I_pedal the centroid and incenter of the pedal simplex of P. Fixed points
/// are exactly the points with an equiareal pedal simplex.
PedalIterationResult pedal_equiareal_iteration(const BarycentricPoint& start,
                                               const SimplexModel& model,
                                               const PedalIterationOptions& options = {});

/// Newton's method on the equiareal conditions (a'_k - a'_1) / mean(a') = 0,
/// k > 1, for the pedal facet volumes a'. Central-difference Jacobian with a
/// backtracking line search. Residuals are the norms of those conditions.
PedalIterationResult equiareal_newton(const BarycentricPoint& start, const SimplexModel& model,
                                      int max_iterations = 100, double tolerance = 1e-13);

struct IsogonicCheck {
  bool isogonic = false;
  double deviation = 0.0;
  std::string diagnostic;
};

/// Whether the antipedal simplex of P is equiareal within tol. An unbounded
/// antipedal simplex yields false with a diagnostic.
IsogonicCheck is_isogonic(const BarycentricPoint& p, const SimplexModel& model, double tol = 1e-7);

struct IsogonicEntry {
  BarycentricPoint conjugate_point;  // L_k, equiareal pedal simplex
  BarycentricPoint isogonic_point;   // F_k, equiareal antipedal simplex
  double pedal_area = 0.0;
  double antipedal_area = 0.0;
  double pedal_deviation = 0.0;
  double antipedal_deviation = 0.0;
  int seed_index = 0;
  int iterations = 0;
};

enum class SeedMethod { pedal_iteration, newton_from_limit, newton_from_seed };

const char* to_string(SeedMethod method);

/// One solver attempt. A seed whose pedal iteration stalls gets up to two
/// Newton attempts, each with its own outcome.
struct SeedOutcome {
  BarycentricPoint seed;
  int seed_index = 0;
  SeedMethod method = SeedMethod::pedal_iteration;
  PedalIterationStatus status = PedalIterationStatus::max_iterations;
  int iterations = 0;
  /// Catalog entry reached, or -1.
  int entry_index = -1;
  std::string note;
};

struct IsogonicCatalog {
  std::vector<IsogonicEntry> entries;
  std::vector<SeedOutcome> seeds;
};

struct EnumerateOptions {
  bool use_default_seeds = true;
  std::vector<BarycentricPoint> extra_seeds;
  PedalIterationOptions iteration{1e-14, 2000, 1.0};
  /// Polish stalled seeds with equiareal_newton, from the last iterate and
  /// from the seed itself.
  bool newton_fallback = true;
  double verify_tolerance = 1e-7;
  double dedup_threshold = 1e-6;
};

/// The centroid plus the centroid with each single coordinate negated.
std::vector<BarycentricPoint> default_isogonic_seeds(int vertex_count);

/// Runs the pedal iteration from every seed, conjugates the limits, keeps
/// those that verify as isogonic, deduplicates and sorts them: the
/// all-positive point first, then by sign pattern. Entry iterations count the
/// steps of the attempt that produced the entry.
IsogonicCatalog enumerate_isogonic(const SimplexModel& model, const EnumerateOptions& options = {});

struct TriadCheck {
  bool congruent = false;
  /// Sorted line angles (radians, in [0, pi/2]) for each vertex triple.
  std::vector<std::array<double, 3>> triads;
  double spread = 0.0;
};

/// Tetrahedra only: compares the angle triples of the line triads
/// P v A_i, P v A_j, P v A_k over all four vertex triples. Throws AtVertex.
TriadCheck triad_angle_check(const BarycentricPoint& p, const SimplexModel& model,
                             double tol = 1e-7);

}  // namespace simplex
