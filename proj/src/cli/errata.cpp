#include "oblique/cli/errata.hpp"

#include <cmath>

#include "oblique/cevians.hpp"
#include "oblique/extended.hpp"
#include "oblique/metrics.hpp"
#include "oblique/solver.hpp"

namespace oblique::cli {

double printed_side_sum_area(double a, Angle A, double b_plus_c) {
  const EllipseDiagnostics e = ellipse_diagnostics(a, A, b_plus_c);
  return e.semi_major * e.semi_minor * std::tan(0.5 * A.radians());
}

double printed_bisector_cf(const TriangleSolution& t) {
  const double A = t.angles[0].radians(), B = t.angles[1].radians();
  return t.sides.a * std::cos(B) / std::cos(0.5 * (A - B));
}

double bisector_cf_angular(const TriangleSolution& t) {
  const double A = t.angles[0].radians(), B = t.angles[1].radians();
  return t.sides.a * std::sin(B) / std::cos(0.5 * (A - B));
}

std::vector<ErratumCheck> check_errata() {
  constexpr double kMatch = 1e-9;
  constexpr double kDiffer = 0.3;
  std::vector<ErratumCheck> out;

  {
    const double a = 3.0, b_plus_c = 9.0;
    const Angle A = Angle::from_radians(std::atan2(3.0, 4.0));
    ErratumCheck c{"side-sum area", "a=3 A=atan(3/4) b+c=9"};
    c.corrected = area_side_sum(a, A, b_plus_c);
    c.printed = printed_side_sum_area(a, A, b_plus_c);
    c.reference = heron_area(solve_side_sum(a, A, b_plus_c).solutions.at(0).sides);
    c.corrected_matches = std::abs(c.corrected - c.reference) <= kMatch * c.reference;
    c.printed_differs = std::abs(c.printed - c.reference) > kDiffer;
    out.push_back(c);
  }
  {
    const TriangleSolution t = solve_sss(1.0, 1.0, 1.0).solutions.at(0);
    ErratumCheck c{"bisector CF", "equilateral side 1"};
    c.corrected = bisector_cf_angular(t);
    c.printed = printed_bisector_cf(t);
    c.reference = bisectors(t).lengths[2];
    c.corrected_matches = std::abs(c.corrected - c.reference) <= kMatch * c.reference;
    c.printed_differs = std::abs(c.printed - c.reference) > kDiffer;
    out.push_back(c);
  }
  return out;
}

}  // namespace oblique::cli
