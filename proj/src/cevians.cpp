#include "oblique/cevians.hpp"

#include <cmath>
#include <string>

#include "oblique/identities.hpp"
#include "oblique/metrics.hpp"
#include "oblique/solver.hpp"

namespace oblique {
namespace {

void require_verified(const TriangleSolution& t, const Tolerances& tol, const char* what) {
  if (!verify(t, tol).accepted(tol)) {
    throw VerificationFailure(std::string(what) + ": recovered triangle fails verification");
  }
}

}  // namespace

MedianData medians(const TriangleSolution& t) {
  MedianData out;
  for (Vertex v : kVertices) {
    const double x = t.side(v), y = t.side(next(v)), z = t.side(prev(v));
    out.lengths[static_cast<std::size_t>(v)] = 0.5 * std::sqrt(2.0 * (y * y + z * z) - x * x);
  }
  const double cot_a = 1.0 / std::tan(t.angles[0].radians());
  const double cot_b = 1.0 / std::tan(t.angles[1].radians());
  out.angle_AMcC = Angle::from_radians(0.5 * kPi - std::atan(0.5 * (cot_b - cot_a)));
  return out;
}

SolutionSet solve_from_medians(double m_a, double m_b, double m_c, const Tolerances& tol) {
  tol.validate();
  require_positive(m_a, "m_a");
  require_positive(m_b, "m_b");
  require_positive(m_c, "m_c");
  const std::array<double, 3> sq = {m_a * m_a, m_b * m_b, m_c * m_c};

  Sides s;
  std::array<double*, 3> dest = {&s.a, &s.b, &s.c};
  for (std::size_t i = 0; i < 3; ++i) {
    // (9/4) x^2 = 2 (m_y^2 + m_z^2) - m_x^2
    const double nine_quarters = 2.0 * (sq[(i + 1) % 3] + sq[(i + 2) % 3]) - sq[i];
    if (nine_quarters <= 0.0) return SolutionSet::none();
    *dest[i] = 2.0 / 3.0 * std::sqrt(nine_quarters);
  }

  SolutionSet out = solve_sss(s.a, s.b, s.c, tol);
  for (TriangleSolution& t : out.solutions) {
    t.case_tag = CaseTag::FromMedians;
    require_verified(t, tol, "from medians");
  }
  return out;
}

BisectorData bisectors(const TriangleSolution& t, const Tolerances& tol) {
  const double a = t.sides.a, b = t.sides.b, c = t.sides.c;
  const HalfAngleData half = half_angle_data(t.sides, tol);

  BisectorData out;
  for (Vertex v : kVertices) {
    const double x = t.side(v), y = t.side(next(v)), z = t.side(prev(v));
    // sqrt(yz) sqrt(1 - (x / (y + z))^2) with the difference of squares factored.
    out.lengths[static_cast<std::size_t>(v)] =
        std::sqrt(y * z * (y + z - x) * (y + z + x)) / (y + z);
  }
  out.foot_segments = {a * c / (b + c), a * b / (b + c), b * c / (a + c),
                       a * b / (a + c), b * c / (a + b), a * c / (a + b)};

  const HalfAngle& ha = half[Vertex::A];
  const HalfAngle& hb = half[Vertex::B];
  const HalfAngle& hc = half[Vertex::C];
  out.incenter_distances = {c * hb.sin_half / hc.cos_half, a * hc.sin_half / ha.cos_half,
                            a * hb.sin_half / ha.cos_half};
  for (std::size_t i = 0; i < 3; ++i) {
    out.ratios[i] = out.incenter_distances[i] / out.lengths[i];
  }
  return out;
}

AltitudeData altitudes(const TriangleSolution& t) {
  const double twice_area = 2.0 * heron_area(t.sides);
  AltitudeData out;
  for (Vertex v : kVertices) {
    out.lengths[static_cast<std::size_t>(v)] = twice_area / t.side(v);
  }
  return out;
}

PedalTriangle pedal_triangle(const TriangleSolution& t, const Tolerances& tol) {
  PedalTriangle out;
  bool obtuse = false;
  for (Angle x : t.angles) obtuse = obtuse || x.radians() > 0.5 * kPi;
  for (Vertex v : kVertices) {
    const auto i = static_cast<std::size_t>(v);
    const double angle = t.angles[i].radians();
    out.sides[i] = t.side(v) * std::abs(std::cos(angle));
    // With an obtuse parent the feet at the two acute vertices see 2X, not
    // 180 - 2X; only the obtuse vertex keeps |180 - 2X|.
    const bool reflected = obtuse && angle < 0.5 * kPi;
    out.angles[i] = Angle::from_radians(reflected ? 2.0 * angle : std::abs(kPi - 2.0 * angle));
    if (std::abs(angle - 0.5 * kPi) <= tol.classification * 0.5 * kPi) {
      out.degenerate = true;
    }
  }
  return out;
}

SolutionSet solve_from_altitudes(double h_a, double h_b, double h_c, const Tolerances& tol) {
  tol.validate();
  require_positive(h_a, "h_a");
  require_positive(h_b, "h_b");
  require_positive(h_c, "h_c");
  const std::array<double, 3> h = {h_a, h_b, h_c};
  const double r = 1.0 / (1.0 / h_a + 1.0 / h_b + 1.0 / h_c);

  std::array<double, 3> excess{};  // h_x - 2r
  for (std::size_t i = 0; i < 3; ++i) {
    excess[i] = h[i] - 2.0 * r;
    if (excess[i] <= tol.degenerate * h[i]) return SolutionSet::none();
  }

  std::array<double, 3> angle{};
  std::array<double, 3> sine{};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    const double tan_half = std::sqrt(h[i] * excess[j] * excess[k] / (h[j] * h[k] * excess[i]));
    angle[i] = 2.0 * std::atan(tan_half);
    sine[i] = 2.0 * tan_half / (1.0 + tan_half * tan_half);
  }
  const double closure = angle[0] + angle[1] + angle[2] - kPi;
  if (std::abs(closure) * (180.0 / kPi) > tol.residual) {
    throw VerificationFailure("from altitudes: recovered angles do not sum to 180 degrees");
  }

  TriangleSolution t{{h_b / sine[2], h_c / sine[0], h_a / sine[1]},
                     {Angle::from_radians(angle[0]), Angle::from_radians(angle[1]),
                      Angle::from_radians(angle[2])},
                     CaseTag::FromAltitudes};
  require_verified(t, tol, "from altitudes");
  return SolutionSet::unique(t);
}

}  // namespace oblique
