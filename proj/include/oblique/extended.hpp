#ifndef OBLIQUE_EXTENDED_HPP_
#define OBLIQUE_EXTENDED_HPP_

#include "oblique/core.hpp"

namespace oblique {

/// Side triples produced by the two perimeter methods.
struct PerimeterSides {
  Sides tangent_product;  // x = p (1 - tan(Y/2) tan(Z/2))
  Sides proportional;     // x = p sin(X/2) / (cos(Y/2) cos(Z/2))
};

PerimeterSides perimeter_side_triples(double perimeter, Angle A, Angle B,
                                      const Tolerances& tol = {});

/// Triangle with perimeter 2p and two interior angles. Both side formulas are
/// evaluated; VerificationFailure if they disagree beyond tol.residual.
SolutionSet solve_perimeter_angles(double perimeter, Angle A, Angle B,
                                   const Tolerances& tol = {});

/// The two mirror solutions for side a, angle A and the sum b + c: `plus`
/// takes B = 90 - A/2 + d, `minus` takes B = 90 - A/2 - d.
struct SideSumBranches {
  TriangleSolution plus;
  TriangleSolution minus;
};

/// NoSolution when infeasible; InvalidInput when b_plus_c <= a.
SideSumBranches side_sum_branches(double a, Angle A, double b_plus_c, const Tolerances& tol = {});

/// Side a, its opposite angle and b + c. Returns the `plus` branch (B >= C);
/// the set is empty when sin(A/2) exceeds a / (b + c) by more than the
/// classification tolerance.
SolutionSet solve_side_sum(double a, Angle A, double b_plus_c, const Tolerances& tol = {});

/// Apexes of all triangles with base a and b + c fixed lie on an ellipse with
/// foci at the base ends. These are its parameters at the apex that sees the
/// base under angle A.
struct EllipseDiagnostics {
  double semi_major = 0.0;        // (b + c) / 2
  double semi_minor = 0.0;        // sqrt(semi_major^2 - semi_focal^2)
  double semi_focal = 0.0;        // a / 2
  Angle phi;                      // sin(phi) = a / (b + c)
  Angle eccentric_anomaly;        // sin(E) = tan(A/2) / tan(phi), E in (0, 90]
  double auxiliary_ordinate = 0;  // semi_major * sin(E)
  double apex_ordinate = 0;       // semi_minor * sin(E): height of the apex over a
};

/// NoSolution when infeasible.
EllipseDiagnostics ellipse_diagnostics(double a, Angle A, double b_plus_c,
                                       const Tolerances& tol = {});

}  // namespace oblique

#endif  // OBLIQUE_EXTENDED_HPP_
