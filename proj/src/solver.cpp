#include "oblique/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oblique/identities.hpp"

namespace oblique {
namespace {

TriangleSolution make_solution(double a, double b, double c, double A, double B, double C,
                               CaseTag tag) {
  return {{a, b, c},
          {Angle::from_radians(A), Angle::from_radians(B), Angle::from_radians(C)},
          tag};
}

// pi - x - y. kPi falls short of pi by about 1.2e-16, which is a visible
// relative error once the result is tiny, so the low part is added back.
double third_angle(double x, double y) {
  constexpr double kPiLow = 1.2246467991473532e-16;
  return ((kPi - x) - y) + kPiLow;
}

// Both given angles interior and their sum clear of 180 degrees.
void require_angle_pair(Angle first, const char* first_name, Angle second,
                        const char* second_name, const Tolerances& tol) {
  require_interior(first, first_name);
  require_interior(second, second_name);
  if (first.radians() + second.radians() >= kPi * (1.0 - tol.classification)) {
    throw NoSolution(std::string(first_name) + " + " + second_name +
                     " must be less than 180 degrees");
  }
}

}  // namespace

SolutionSet solve_asa(Angle B, Angle C, double a, const Tolerances& tol) {
  tol.validate();
  require_positive(a, "a");
  require_angle_pair(B, "B", C, "C", tol);
  const double A = third_angle(B.radians(), C.radians());
  const double ratio = a / std::sin(A);
  return SolutionSet::unique(make_solution(a, ratio * std::sin(B.radians()),
                                           ratio * std::sin(C.radians()), A, B.radians(),
                                           C.radians(), CaseTag::Asa));
}

SolutionSet solve_aas(Angle A, Angle B, double a, const Tolerances& tol) {
  tol.validate();
  require_positive(a, "a");
  require_angle_pair(A, "A", B, "B", tol);
  const double C = third_angle(A.radians(), B.radians());
  const double ratio = a / std::sin(A.radians());
  return SolutionSet::unique(make_solution(a, ratio * std::sin(B.radians()),
                                           ratio * std::sin(C), A.radians(), B.radians(), C,
                                           CaseTag::Aas));
}

SolutionSet solve_ssa(double a, double b, Angle A, const Tolerances& tol) {
  tol.validate();
  require_positive(a, "a");
  require_positive(b, "b");
  require_interior(A, "A");

  const double angle = A.radians();
  const bool acute = angle < 0.5 * kPi;
  const double sin_a = std::sin(angle);
  const double cos_a = std::cos(angle);
  const double height = b * sin_a;

  if (nearly_equal(a, b, tol.classification)) {
    if (!acute) return SolutionSet::none();
    SolutionSet out;
    out.taxonomy = Taxonomy::Isosceles;
    out.solutions.push_back(
        make_solution(a, b, 2.0 * a * cos_a, angle, angle, third_angle(angle, angle), CaseTag::Ssa));
    return out;
  }

  if (a < b) {
    if (!acute) return SolutionSet::none();
    if (std::abs(height - a) <= tol.classification * b) {
      // Right angle at B; the triangle is fixed by a and A.
      SolutionSet out;
      out.taxonomy = Taxonomy::TangentRight;
      out.solutions.push_back(make_solution(a, a / sin_a, a * cos_a / sin_a, angle, 0.5 * kPi,
                                            0.5 * kPi - angle, CaseTag::Ssa));
      return out;
    }
    if (height > a) return SolutionSet::none();
  }

  // sin B = b sin A / a and cos B = root / a, so atan2 gives the acute root
  // without the cancellation an arccos of the sides suffers on flat triangles.
  const double root = std::sqrt(std::max(0.0, (a - height) * (a + height)));
  const double acute_b = std::atan2(height, root);
  const double ratio = a / sin_a;
  const double large_c = third_angle(angle, acute_b);
  // sin C = sin(A + B); take the sine of whichever argument is acute, so c
  // stays consistent with the stored C when C is tiny.
  const double c = ratio * std::sin(large_c <= 0.5 * kPi ? large_c : angle + acute_b);

  if (a > b) {
    return SolutionSet::unique(make_solution(a, b, c, angle, acute_b, large_c, CaseTag::Ssa));
  }

  // a < b with A acute and b sin A < a: B and 180 - B. Ascending B.
  SolutionSet out;
  out.taxonomy = Taxonomy::Two;
  out.solutions.push_back(make_solution(a, b, c, angle, acute_b, large_c, CaseTag::Ssa));
  const double small_c = acute_b - angle;
  out.solutions.push_back(make_solution(a, b, ratio * std::sin(small_c), angle, kPi - acute_b,
                                        small_c, CaseTag::Ssa));
  return out;
}

SolutionSet solve_sas(double a, double b, Angle C, const Tolerances& tol) {
  tol.validate();
  require_positive(a, "a");
  require_positive(b, "b");
  require_interior(C, "C");
  const double angle = C.radians();
  // c^2 = a^2 + b^2 - 2ab cos C rewritten without cancellation for small C.
  const double half_sin = std::sin(0.5 * angle);
  const double c = std::sqrt((a - b) * (a - b) + 4.0 * a * b * half_sin * half_sin);

  double A = 0.0;
  double B = 0.0;
  if (a <= b) {
    A = included_angle(b, c, a).radians();
    B = third_angle(angle, A);
  } else {
    B = included_angle(a, c, b).radians();
    A = third_angle(angle, B);
  }
  return SolutionSet::unique(make_solution(a, b, c, A, B, angle, CaseTag::Sas));
}

SolutionSet solve_sas_tangent(double a, double b, Angle C, const Tolerances& tol) {
  tol.validate();
  require_positive(a, "a");
  require_positive(b, "b");
  require_interior(C, "C");
  const double angle = C.radians();
  const double half_sum = 0.5 * third_angle(angle, 0.0);
  const double half_diff = std::atan((a - b) / (a + b) / std::tan(0.5 * angle));
  const double A = half_sum + half_diff;
  const double B = half_sum - half_diff;
  // Either sine-law form works; the larger angle has the better-conditioned sine.
  const double c = a >= b ? a * std::sin(angle) / std::sin(A) : b * std::sin(angle) / std::sin(B);
  return SolutionSet::unique(make_solution(a, b, c, A, B, angle, CaseTag::SasTangent));
}

SolutionSet solve_sss(double a, double b, double c, const Tolerances& tol, SssMethod method) {
  tol.validate();
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(c, "c");
  const Sides s{a, b, c};
  if (!validate_sides(s, tol).valid()) return SolutionSet::none();

  if (method == SssMethod::ArcCos) {
    return SolutionSet::unique(make_solution(a, b, c, included_angle(b, c, a).radians(),
                                             included_angle(c, a, b).radians(),
                                             included_angle(a, b, c).radians(), CaseTag::Sss));
  }

  const double r = half_angle_data(s, tol).inradius;
  auto from_tangent = [&](Vertex v) { return 2.0 * std::atan2(r, deficit(s, v)); };
  return SolutionSet::unique(make_solution(a, b, c, from_tangent(Vertex::A),
                                           from_tangent(Vertex::B), from_tangent(Vertex::C),
                                           CaseTag::Sss));
}

}  // namespace oblique
