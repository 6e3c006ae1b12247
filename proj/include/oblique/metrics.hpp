#ifndef OBLIQUE_METRICS_HPP_
#define OBLIQUE_METRICS_HPP_

#include <array>

#include "oblique/core.hpp"

namespace oblique {

/// Area of one triangle by every available route.
struct AreaBundle {
  double two_sides_included = 0.0;  // ab sin C / 2
  double side_two_angles = 0.0;     // a^2 sin B sin C / (2 sin A)
  double heron = 0.0;               // sorted-side stable form
  double circumradius = 0.0;        // abc / 4R
  double inradius = 0.0;            // p r
  double excircle_squared = 0.0;    // r r_a r_b r_c, equal to area^2
};

AreaBundle area_bundle(const TriangleSolution& t, const Tolerances& tol = {});

/// Heron's formula with sides sorted descending and parenthesised so that no
/// difference of nearly equal quantities is formed.
double heron_area(const Sides& s);

/// Area from side a, angle A and the sum b + c: half the base times the apex
/// height on the ellipse, b'^2 tan(A/2). NoSolution when infeasible.
double area_side_sum(double a, Angle A, double b_plus_c, const Tolerances& tol = {});

struct CircleData {
  double inradius = 0.0;
  double circumradius = 0.0;
  std::array<double, 3> exradii{};  // (r_a, r_b, r_c)
};

/// Exradii through r_x = p r / (p - x).
CircleData circle_data(const TriangleSolution& t, const Tolerances& tol = {});

/// Triangle of the three excenters. Angle P = 90 - A/2 sits opposite side
/// QR = a / sin(A/2), and cyclically.
struct ExcentralTriangle {
  std::array<Angle, 3> angles;
  std::array<double, 3> sides{};  // (QR, RP, PQ)
};

ExcentralTriangle excentral_triangle(const TriangleSolution& t);

}  // namespace oblique

#endif  // OBLIQUE_METRICS_HPP_
