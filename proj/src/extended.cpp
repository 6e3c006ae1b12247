#include "oblique/extended.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oblique {
namespace {

struct SideSumSetup {
  double half_angle = 0.0;      // A / 2
  double half_difference = 0.0; // |B - C| / 2
};

// Validates the side-sum inputs and returns the half difference of B and C,
// or throws NoSolution when no apex on the ellipse sees the base under A.
SideSumSetup side_sum_setup(double a, Angle A, double b_plus_c, const Tolerances& tol) {
  tol.validate();
  require_positive(a, "a");
  require_positive(b_plus_c, "b_plus_c");
  require_interior(A, "A");
  if (b_plus_c <= a) {
    throw InvalidInput("b_plus_c must exceed a");
  }
  const double half = 0.5 * A.radians();
  const double sin_half = std::sin(half);
  if (sin_half > a / b_plus_c + tol.classification) {
    throw NoSolution("sin(A/2) exceeds a / (b + c)");
  }
  // x = cos((B - C)/2). Inside the classification band of 1 the apex sits on
  // the minor axis; acos there would turn roundoff into a visible difference.
  const double x = b_plus_c * sin_half / a;
  return {half, x >= 1.0 - tol.classification ? 0.0 : std::acos(x)};
}

TriangleSolution side_sum_triangle(double a, Angle A, double B, double C) {
  const double ratio = a / std::sin(A.radians());
  return {{a, ratio * std::sin(B), ratio * std::sin(C)},
          {A, Angle::from_radians(B), Angle::from_radians(C)},
          CaseTag::SideSum};
}

}  // namespace

PerimeterSides perimeter_side_triples(double perimeter, Angle A, Angle B, const Tolerances& tol) {
  tol.validate();
  require_positive(perimeter, "perimeter");
  require_interior(A, "A");
  require_interior(B, "B");
  if (A.radians() + B.radians() >= kPi * (1.0 - tol.classification)) {
    throw NoSolution("A + B must be less than 180 degrees");
  }
  const double p = 0.5 * perimeter;
  const double half_a = 0.5 * A.radians();
  const double half_b = 0.5 * B.radians();
  const double half_c = 0.5 * kPi - half_a - half_b;

  const double ta = std::tan(half_a), tb = std::tan(half_b), tc = std::tan(half_c);
  const double ca = std::cos(half_a), cb = std::cos(half_b), cc = std::cos(half_c);

  PerimeterSides out;
  out.tangent_product = {p * (1.0 - tb * tc), p * (1.0 - ta * tc), p * (1.0 - ta * tb)};
  out.proportional = {p * std::sin(half_a) / (cb * cc), p * std::sin(half_b) / (ca * cc),
                      p * std::sin(half_c) / (ca * cb)};
  return out;
}

SolutionSet solve_perimeter_angles(double perimeter, Angle A, Angle B, const Tolerances& tol) {
  const PerimeterSides both = perimeter_side_triples(perimeter, A, B, tol);
  for (Vertex v : kVertices) {
    if (!nearly_equal(both.tangent_product[v], both.proportional[v], tol.residual)) {
      throw VerificationFailure("perimeter methods disagree");
    }
  }
  const Angle C = Angle::from_radians(kPi - A.radians() - B.radians());
  return SolutionSet::unique({both.proportional, {A, B, C}, CaseTag::Perimeter});
}

SideSumBranches side_sum_branches(double a, Angle A, double b_plus_c, const Tolerances& tol) {
  const SideSumSetup setup = side_sum_setup(a, A, b_plus_c, tol);
  const double base = 0.5 * kPi - setup.half_angle;
  return {side_sum_triangle(a, A, base + setup.half_difference, base - setup.half_difference),
          side_sum_triangle(a, A, base - setup.half_difference, base + setup.half_difference)};
}

SolutionSet solve_side_sum(double a, Angle A, double b_plus_c, const Tolerances& tol) {
  try {
    return SolutionSet::unique(side_sum_branches(a, A, b_plus_c, tol).plus);
  } catch (const NoSolution&) {
    return SolutionSet::none();
  }
}

EllipseDiagnostics ellipse_diagnostics(double a, Angle A, double b_plus_c, const Tolerances& tol) {
  const SideSumSetup setup = side_sum_setup(a, A, b_plus_c, tol);
  EllipseDiagnostics out;
  out.semi_major = 0.5 * b_plus_c;
  out.semi_focal = 0.5 * a;
  out.semi_minor = 0.5 * std::sqrt((b_plus_c - a) * (b_plus_c + a));
  out.phi = Angle::from_radians(std::asin(a / b_plus_c));
  const double tan_phi = out.semi_focal / out.semi_minor;
  // On the boundary band the apex is on the minor axis and E is exactly 90.
  const double sin_e = setup.half_difference == 0.0
                           ? 1.0
                           : std::min(1.0, std::tan(setup.half_angle) / tan_phi);
  out.eccentric_anomaly = Angle::from_radians(std::asin(sin_e));
  out.auxiliary_ordinate = out.semi_major * sin_e;
  out.apex_ordinate = out.semi_minor * sin_e;
  return out;
}

}  // namespace oblique
