#ifndef OBLIQUE_SOLVER_HPP_
#define OBLIQUE_SOLVER_HPP_

#include "oblique/core.hpp"

namespace oblique {

/// How the three-sides case recovers its angles.
enum class SssMethod {
  ArcCos,     // law of cosines, one angle at a time
  HalfAngle,  // tan(X/2) = r / (p - x)
};

/// Two angles and the side between them.
SolutionSet solve_asa(Angle B, Angle C, double a, const Tolerances& tol = {});

/// Two angles and the side opposite the first.
SolutionSet solve_aas(Angle A, Angle B, double a, const Tolerances& tol = {});

/// Two sides and the angle opposite the first (the ambiguous case).
///
/// Taxonomy:
///   a == b (classification band): A acute -> Isosceles, else None.
///   a > b                         -> Unique.
///   a < b, A >= 90                -> None.
///   a < b, A acute: |b sin A - a| <= classification * b -> TangentRight,
///                   b sin A > a -> None, else Two with ascending B.
SolutionSet solve_ssa(double a, double b, Angle A, const Tolerances& tol = {});

/// Two sides and the included angle; remaining angles by the law of cosines.
SolutionSet solve_sas(double a, double b, Angle C, const Tolerances& tol = {});

/// Same inputs as solve_sas, solved through the tangent law: the half
/// difference of the unknown angles first, then the third side.
SolutionSet solve_sas_tangent(double a, double b, Angle C, const Tolerances& tol = {});

/// Three sides. Empty set when the triangle inequalities fail.
SolutionSet solve_sss(double a, double b, double c, const Tolerances& tol = {},
                      SssMethod method = SssMethod::ArcCos);

}  // namespace oblique

#endif  // OBLIQUE_SOLVER_HPP_
