#ifndef OBLIQUE_CLI_ERRATA_HPP_
#define OBLIQUE_CLI_ERRATA_HPP_

#include <string>
#include <vector>

#include "oblique/core.hpp"

namespace oblique::cli {

/// a'b' tan(A/2) for the side-sum case: the base times the auxiliary-circle
/// ordinate, which the source prints as the area.
double printed_side_sum_area(double a, Angle A, double b_plus_c);

/// a cos B / cos((A - B)/2), the printed form of the bisector from C.
double printed_bisector_cf(const TriangleSolution& t);

/// a sin B / cos((A - B)/2), the corrected angular form.
double bisector_cf_angular(const TriangleSolution& t);

struct ErratumCheck {
  std::string name;
  std::string fixture;
  double corrected = 0.0;
  double printed = 0.0;
  double reference = 0.0;  // independent value the corrected form must match
  bool corrected_matches = false;
  bool printed_differs = false;

  bool passed() const { return corrected_matches && printed_differs; }
};

/// Side-sum area on a = 3, A = atan(3/4), b + c = 9 (the 3-4-5 triangle) and
/// bisector CF on the unit equilateral triangle.
std::vector<ErratumCheck> check_errata();

}  // namespace oblique::cli

#endif  // OBLIQUE_CLI_ERRATA_HPP_
