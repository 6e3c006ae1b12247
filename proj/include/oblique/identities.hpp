#ifndef OBLIQUE_IDENTITIES_HPP_
#define OBLIQUE_IDENTITIES_HPP_

#include <array>

#include "oblique/core.hpp"

namespace oblique {

struct HalfAngle {
  double sin_half = 0.0;
  double cos_half = 0.0;
  double tan_half = 0.0;
};

/// Sine, cosine and tangent of each half interior angle, computed from the
/// sides alone, together with the inradius.
struct HalfAngleData {
  std::array<HalfAngle, 3> vertex;
  double inradius = 0.0;

  const HalfAngle& operator[](Vertex v) const { return vertex[static_cast<std::size_t>(v)]; }
};

/// Radicands that fall below zero by no more than tol.residual are clamped;
/// anything more negative (or invalid sides) raises DomainError.
HalfAngleData half_angle_data(const Sides& s, const Tolerances& tol = {});

/// Tangency lengths (p - a, p - b, p - c): distances from each vertex to the
/// points where the incircle touches the adjacent sides.
std::array<double, 3> tangency_lengths(const Sides& s);

/// R = x / (2 sin X), using the largest angle.
double circumradius(const TriangleSolution& t);

/// (a - b cos C - c cos B, b - c cos A - a cos C, c - a cos B - b cos A).
std::array<double, 3> projection_residuals(const TriangleSolution& t);

/// ((a+b)/c - cos((A-B)/2)/sin(C/2), (a-b)/c - sin((A-B)/2)/cos(C/2)).
/// DomainError when C is within the classification band of 0 or 180 degrees.
std::array<double, 2> mollweide_residuals(const TriangleSolution& t, const Tolerances& tol = {});

/// (x+y)/(x-y) - tan((X+Y)/2)/tan((X-Y)/2) for the side pair (first, second).
/// Diagnostic only; DegenerateInput when the two sides are equal.
double tangent_law_residual(const TriangleSolution& t, Vertex first = Vertex::A,
                            Vertex second = Vertex::B, const Tolerances& tol = {});

/// Scale-free residuals of one candidate triangle.
///
/// Projection residuals are divided by the side on the left-hand side, and
/// both Mollweide residuals by (a+b)/c, so the report does not depend on the
/// triangle's size. The angle-sum residual is in degrees.
struct ResidualReport {
  std::array<double, 3> projection{};
  std::array<double, 2> mollweide{};
  double angle_sum_deg = 0.0;
  double max_abs = 0.0;

  bool accepted(const Tolerances& tol = {}) const { return max_abs <= tol.residual; }
};

/// Never throws. A singular Mollweide pair is reported as infinite residuals.
ResidualReport verify(const TriangleSolution& t, const Tolerances& tol = {});

}  // namespace oblique

#endif  // OBLIQUE_IDENTITIES_HPP_
