#include "oblique/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "oblique/extended.hpp"
#include "oblique/identities.hpp"

namespace oblique {

double heron_area(const Sides& s) {
  std::array<double, 3> x = {s.a, s.b, s.c};
  std::sort(x.begin(), x.end(), std::greater<>());
  const double a = x[0], b = x[1], c = x[2];
  const double product = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  return 0.25 * std::sqrt(std::max(0.0, product));
}

AreaBundle area_bundle(const TriangleSolution& t, const Tolerances& tol) {
  const double a = t.sides.a, b = t.sides.b, c = t.sides.c;
  const double sin_a = std::sin(t.angles[0].radians());
  const double sin_b = std::sin(t.angles[1].radians());
  const double sin_c = std::sin(t.angles[2].radians());
  const CircleData circles = circle_data(t, tol);

  AreaBundle out;
  out.two_sides_included = 0.5 * a * b * sin_c;
  out.side_two_angles = 0.5 * a * a * sin_b * sin_c / sin_a;
  out.heron = heron_area(t.sides);
  out.circumradius = a * b * c / (4.0 * circles.circumradius);
  out.inradius = semiperimeter(t.sides) * circles.inradius;
  out.excircle_squared =
      circles.inradius * circles.exradii[0] * circles.exradii[1] * circles.exradii[2];
  return out;
}

double area_side_sum(double a, Angle A, double b_plus_c, const Tolerances& tol) {
  // Raises NoSolution / InvalidInput exactly like the solver.
  const EllipseDiagnostics e = ellipse_diagnostics(a, A, b_plus_c, tol);
  return e.semi_minor * e.semi_minor * std::tan(0.5 * A.radians());
}

CircleData circle_data(const TriangleSolution& t, const Tolerances& tol) {
  CircleData out;
  out.inradius = half_angle_data(t.sides, tol).inradius;
  out.circumradius = circumradius(t);
  const double p = semiperimeter(t.sides);
  for (Vertex v : kVertices) {
    out.exradii[static_cast<std::size_t>(v)] = p * out.inradius / deficit(t.sides, v);
  }
  return out;
}

ExcentralTriangle excentral_triangle(const TriangleSolution& t) {
  ExcentralTriangle out;
  for (Vertex v : kVertices) {
    const auto i = static_cast<std::size_t>(v);
    const double half = 0.5 * t.angles[i].radians();
    out.angles[i] = Angle::from_radians(0.5 * kPi - half);
    out.sides[i] = t.side(v) / std::sin(half);
  }
  return out;
}

}  // namespace oblique
