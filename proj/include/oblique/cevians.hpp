#ifndef OBLIQUE_CEVIANS_HPP_
#define OBLIQUE_CEVIANS_HPP_

#include <array>

#include "oblique/core.hpp"

namespace oblique {

struct MedianData {
  std::array<double, 3> lengths{};  // (m_a, m_b, m_c)
  Angle angle_AMcC;                 // at the midpoint M_c of AB, between M_cA and M_cC
};

/// Median lengths from the sides; the angle from cot = (cot B - cot A) / 2,
/// acute exactly when B < A.
MedianData medians(const TriangleSolution& t);

/// Sides recovered from the linear system in the squared medians. Empty set
/// when m_y^2 + m_z^2 <= m_x^2 / 2 for some x, or the sides fail validation.
/// VerificationFailure if the recovered triangle does not pass verify().
SolutionSet solve_from_medians(double m_a, double m_b, double m_c, const Tolerances& tol = {});

/// D, E, F are the feet of the bisectors from A, B, C; I is the incenter.
struct BisectorData {
  std::array<double, 3> lengths{};             // (AD, BE, CF)
  std::array<double, 6> foot_segments{};       // (BD, DC, AE, EC, AF, FB)
  std::array<double, 3> incenter_distances{};  // (AI, BI, CI)
  std::array<double, 3> ratios{};              // (AI/AD, BI/BE, CI/CF)
};

BisectorData bisectors(const TriangleSolution& t, const Tolerances& tol = {});

struct AltitudeData {
  std::array<double, 3> lengths{};  // (h_a, h_b, h_c)
};

/// h_x = 2S / x with S from the sides.
AltitudeData altitudes(const TriangleSolution& t);

/// Triangle of the altitude feet. Angle i is the angle at the foot on side i.
struct PedalTriangle {
  std::array<double, 3> sides{};  // (EF, DF, DE) = (a|cos A|, b|cos B|, c|cos C|)
  std::array<Angle, 3> angles;    // |180 - 2X|; 2X at the acute vertices of an obtuse parent
  bool degenerate = false;        // a parent angle is within the band of 90 degrees
};

PedalTriangle pedal_triangle(const TriangleSolution& t, const Tolerances& tol = {});

/// Empty set when some h_x does not exceed the incircle diameter 2r by the
/// degeneracy margin. VerificationFailure if the angles fail to close or the
/// result does not pass verify().
SolutionSet solve_from_altitudes(double h_a, double h_b, double h_c, const Tolerances& tol = {});

}  // namespace oblique

#endif  // OBLIQUE_CEVIANS_HPP_
