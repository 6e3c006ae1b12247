#include "oblique/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace oblique {
namespace {

double checked_sqrt(double radicand, const Tolerances& tol, const char* what) {
  if (radicand >= 0.0) {
    return std::sqrt(radicand);
  }
  if (radicand >= -tol.residual) {
    return 0.0;
  }
  throw DomainError(std::string("negative radicand in ") + what);
}

}  // namespace

HalfAngleData half_angle_data(const Sides& s, const Tolerances& tol) {
  if (validate_sides(s, tol).status == SideVerdict::Status::Invalid) {
    throw DomainError("half-angle formulas need valid sides");
  }
  const double p = semiperimeter(s);
  HalfAngleData out;
  for (Vertex v : kVertices) {
    const double y = s[next(v)];
    const double z = s[prev(v)];
    const double own = deficit(s, v);
    const double other1 = deficit(s, next(v));
    const double other2 = deficit(s, prev(v));
    HalfAngle& h = out.vertex[static_cast<std::size_t>(v)];
    h.sin_half = checked_sqrt(other1 * other2 / (y * z), tol, "sin of half angle");
    h.cos_half = checked_sqrt(p * own / (y * z), tol, "cos of half angle");
    h.tan_half = h.sin_half / h.cos_half;
  }
  out.inradius = checked_sqrt(deficit(s, Vertex::A) * deficit(s, Vertex::B) *
                                  deficit(s, Vertex::C) / p,
                              tol, "inradius");
  return out;
}

std::array<double, 3> tangency_lengths(const Sides& s) {
  return {deficit(s, Vertex::A), deficit(s, Vertex::B), deficit(s, Vertex::C)};
}

double circumradius(const TriangleSolution& t) {
  for (Angle x : t.angles) {
    if (!x.is_interior()) {
      throw DomainError("circumradius needs interior angles in (0, 180) degrees");
    }
  }
  const auto largest = std::max_element(
      t.angles.begin(), t.angles.end(),
      [](Angle x, Angle y) { return std::sin(x.radians()) < std::sin(y.radians()); });
  const auto v = static_cast<Vertex>(largest - t.angles.begin());
  return t.side(v) / (2.0 * std::sin(largest->radians()));
}

std::array<double, 3> projection_residuals(const TriangleSolution& t) {
  std::array<double, 3> out{};
  for (Vertex v : kVertices) {
    const Vertex u = next(v);
    const Vertex w = prev(v);
    out[static_cast<std::size_t>(v)] = t.side(v) - t.side(u) * std::cos(t.angle(w).radians()) -
                                       t.side(w) * std::cos(t.angle(u).radians());
  }
  return out;
}

std::array<double, 2> mollweide_residuals(const TriangleSolution& t, const Tolerances& tol) {
  const double a = t.sides.a, b = t.sides.b, c = t.sides.c;
  const double half_diff = 0.5 * (t.angles[0].radians() - t.angles[1].radians());
  const double half_c = 0.5 * t.angles[2].radians();
  if (half_c <= tol.classification * kPi || half_c >= 0.5 * kPi * (1.0 - tol.classification)) {
    throw DomainError("Mollweide residuals undefined for C near 0 or 180 degrees");
  }
  return {(a + b) / c - std::cos(half_diff) / std::sin(half_c),
          (a - b) / c - std::sin(half_diff) / std::cos(half_c)};
}

double tangent_law_residual(const TriangleSolution& t, Vertex first, Vertex second,
                            const Tolerances& tol) {
  const double x = t.side(first);
  const double y = t.side(second);
  const double angle_x = t.angle(first).radians();
  const double angle_y = t.angle(second).radians();
  if (std::abs(x - y) <= tol.classification * (x + y) ||
      std::abs(angle_x - angle_y) <= tol.classification * kPi) {
    throw DegenerateInput("tangent law undefined for equal sides");
  }
  return (x + y) / (x - y) -
         std::tan(0.5 * (angle_x + angle_y)) / std::tan(0.5 * (angle_x - angle_y));
}

ResidualReport verify(const TriangleSolution& t, const Tolerances& tol) {
  ResidualReport report;
  const auto projection = projection_residuals(t);
  for (Vertex v : kVertices) {
    const auto i = static_cast<std::size_t>(v);
    report.projection[i] = projection[i] / t.side(v);
  }

  try {
    const auto mollweide = mollweide_residuals(t, tol);
    const double scale = (t.sides.a + t.sides.b) / t.sides.c;
    report.mollweide = {mollweide[0] / scale, mollweide[1] / scale};
  } catch (const DomainError&) {
    report.mollweide = {std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity()};
  }

  report.angle_sum_deg =
      t.angles[0].degrees() + t.angles[1].degrees() + t.angles[2].degrees() - 180.0;

  const std::array<double, 6> all = {report.projection[0], report.projection[1],
                                     report.projection[2], report.mollweide[0],
                                     report.mollweide[1],  report.angle_sum_deg};
  double worst = 0.0;
  for (double r : all) {
    // NaN anywhere means the candidate is not a triangle.
    worst = std::isnan(r) ? std::numeric_limits<double>::infinity() : std::max(worst, std::abs(r));
  }
  report.max_abs = worst;
  return report;
}

}  // namespace oblique
