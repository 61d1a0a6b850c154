#pragma once

#include <optional>
#include <vector>

#include "simplex/core.hpp"

namespace simplex {

enum class PedalKind { pedal, antipedal, polar, inversive };

/// A simplex derived from a reference simplex and a generating point.
///
/// `points[i]` corresponds to vertex A_i of the reference simplex: the foot on
/// the sideplane opposite A_i (pedal), the vertex opposite the hyperplane
/// through A_i (antipedal), the pole of the sideplane opposite A_i (polar), or
/// the image of A_i (inversive). `simplex` is empty when the points are
/// affinely dependent.
struct PedalResult {
  PedalKind kind = PedalKind::pedal;
  std::vector<Vector> points;
  Vector source;
  std::optional<SimplexModel> simplex;

  bool degenerate() const { return !simplex.has_value(); }
  /// Facet volumes of the point set; defined even when degenerate.
  Vector facet_volumes() const;
};

/// Orthogonal projections of P onto the n+1 sideplanes. Degenerate results are
/// flagged, not thrown.
PedalResult pedal_simplex(const BarycentricPoint& p, const SimplexModel& model);

/// Simplex bounded by the hyperplanes through A_i perpendicular to P - A_i.
/// Throws UnboundedAntipedal when the bounding hyperplanes do not meet in a
/// simplex.
PedalResult antipedal_simplex(const BarycentricPoint& p, const SimplexModel& model);

/// Poles of the sideplanes with respect to the sphere of the given radius
/// centered at P. Throws OnSideplane when some p_i = 0.
PedalResult polar_simplex(const BarycentricPoint& p, double radius, const SimplexModel& model);

/// Image of the vertices under inversion in the sphere (center, radius).
/// Throws CenterAtVertex.
PedalResult inversive_image(const SimplexModel& model, const Vector& center, double radius);

/// (max a_i - min a_i) / mean a_i over the facet volumes; zero iff equiareal.
double equiareal_deviation(const Vector& facet_volumes);
double equiareal_deviation(const SimplexModel& model);
double equiareal_deviation(const PedalResult& result);

}  // namespace simplex
