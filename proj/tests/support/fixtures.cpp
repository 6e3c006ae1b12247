#include "support/fixtures.hpp"

#include <cmath>
#include <sstream>

#include "oblique/cevians.hpp"
#include "oblique/extended.hpp"
#include "oblique/identities.hpp"
#include "oblique/metrics.hpp"
#include "oblique/solver.hpp"
#include "support/oracle.hpp"

namespace fixtures {

using namespace oblique;

void Suite::near(const std::string& name, double got, double want, double tol) {
  const double err = std::abs(got - want);
  const double bound = want == 0.0 ? tol : tol * std::abs(want);
  std::ostringstream detail;
  detail.precision(17);
  detail << "got " << got << ", want " << want << ", |diff| " << err;
  results_.push_back({name, err <= bound, detail.str()});
}

void Suite::truth(const std::string& name, bool condition, const std::string& detail) {
  results_.push_back({name, condition, detail});
}

namespace {

constexpr double kDeg = 180.0 / oracle::kPi;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

Angle deg(double d) { return Angle::from_degrees(d); }
Angle rad(double r) { return Angle::from_radians(r); }

// 3-4-5 with A opposite 3, B opposite 4, C = 90.
const double kA345 = std::atan2(3.0, 4.0);
const double kB345 = std::atan2(4.0, 3.0);
// 5-7-8: cos A = 11/14, B = 60, cos C = 1/7.
const double kA578 = std::atan2(5.0 * kSqrt3, 11.0);
const double kB578 = oracle::kPi / 3.0;
const double kC578 = std::atan2(4.0 * kSqrt3, 1.0);

TriangleSolution sss(double a, double b, double c) { return solve_sss(a, b, c).solutions.at(0); }

void expect_triangle(Suite& s, const std::string& name, const TriangleSolution& t,
                     std::array<double, 3> sides, std::array<double, 3> angles_rad,
                     double tol = kRelative) {
  s.near(name + " a", t.sides.a, sides[0], tol);
  s.near(name + " b", t.sides.b, sides[1], tol);
  s.near(name + " c", t.sides.c, sides[2], tol);
  s.near(name + " A", t.angles[0].degrees(), angles_rad[0] * kDeg);
  s.near(name + " B", t.angles[1].degrees(), angles_rad[1] * kDeg);
  s.near(name + " C", t.angles[2].degrees(), angles_rad[2] * kDeg);
}

bool single(const SolutionSet& set, Taxonomy tax) { return set.size() == 1 && set.taxonomy == tax; }

}  // namespace

void core_fixtures(Suite& s) {
  s.truth("validate (3,4,5) valid", validate_sides({3, 4, 5}).status == SideVerdict::Status::Valid);
  const SideVerdict flat = validate_sides({1, 2, 3});
  s.truth("validate (1,2,3) degenerate",
          flat.status == SideVerdict::Status::Degenerate && flat.violated == "a + b > c");
  const SideVerdict bad = validate_sides({1, 1, 5});
  s.truth("validate (1,1,5) invalid",
          bad.status == SideVerdict::Status::Invalid && bad.violated == "a + b > c");
  s.near("semiperimeter (3,4,5)", semiperimeter({3, 4, 5}), 6.0, kExact);
  s.near("semiperimeter (1,1,1)", semiperimeter({1, 1, 1}), 1.5, kExact);
  s.near("semiperimeter (5,7,8)", semiperimeter({5, 7, 8}), 10.0, kExact);
}

void identity_fixtures(Suite& s) {
  s.near("circumradius (3,4,5)", circumradius(sss(3, 4, 5)), 2.5);
  s.near("circumradius equilateral", circumradius(sss(1, 1, 1)), 1.0 / kSqrt3);
  s.near("circumradius (5,7,8)", circumradius(sss(5, 7, 8)), 7.0 / kSqrt3);
  s.near("circumradius (5,7,8) vs oracle", circumradius(sss(5, 7, 8)),
         oracle::Placed(5, 7, 8).circumradius());
  s.throws<DomainError>("circumradius zero angle", [] {
    TriangleSolution t = sss(3, 4, 5);
    t.angles[0] = rad(0.0);
    circumradius(t);
  });

  const HalfAngleData h345 = half_angle_data({3, 4, 5});
  s.near("tan(A/2) (3,4,5)", h345[Vertex::A].tan_half, 1.0 / 3.0);
  s.near("tan(B/2) (3,4,5)", h345[Vertex::B].tan_half, 0.5);
  s.near("tan(C/2) (3,4,5)", h345[Vertex::C].tan_half, 1.0);
  s.near("inradius (3,4,5)", h345.inradius, 1.0, kExact);
  const HalfAngleData h111 = half_angle_data({1, 1, 1});
  for (Vertex v : kVertices) {
    s.near("tan half equilateral", h111[v].tan_half, 1.0 / kSqrt3);
  }
  s.near("inradius equilateral", h111.inradius, 1.0 / (2.0 * kSqrt3));
  s.near("inradius (5,7,8)", half_angle_data({5, 7, 8}).inradius, kSqrt3);
  s.throws<DomainError>("half angles invalid sides", [] { half_angle_data({1, 1, 5}); });

  const auto eq_proj = projection_residuals(sss(1, 1, 1));
  for (double r : eq_proj) s.near("projection equilateral", r, 0.0, kExact);
  for (double r : projection_residuals(sss(3, 4, 5))) s.near("projection (3,4,5)", r, 0.0, kExact);
  {
    TriangleSolution t = sss(3, 4, 5);
    t.angles[0] = deg(40.0);
    const auto r = projection_residuals(t);
    // A only enters the second and third residuals.
    s.near("projection perturbed A first", r[0], 0.0, kExact);
    s.near("projection perturbed A second", r[1], 4.0 - 5.0 * std::cos(40.0 / kDeg));
    s.truth("projection perturbed A exceeds 1e-3", std::abs(r[1]) > 1e-3);
  }

  const auto eq_moll = mollweide_residuals(sss(1, 1, 1));
  s.near("mollweide equilateral first", eq_moll[0], 0.0, kExact);
  s.near("mollweide equilateral second", eq_moll[1], 0.0, kExact);
  for (double r : mollweide_residuals(sss(3, 4, 5))) s.near("mollweide (3,4,5)", r, 0.0, kExact);
  s.near("mollweide isosceles second", mollweide_residuals(solve_sas(2, 2, deg(37)).solutions[0])[1],
         0.0, kExact);
  s.throws<DomainError>("mollweide C near 180", [] {
    TriangleSolution t = sss(3, 4, 5);
    t.angles[2] = rad(oracle::kPi);
    mollweide_residuals(t);
  });

  s.near("tangent law (5,7,8) pair (b,c)",
         tangent_law_residual(sss(5, 7, 8), Vertex::B, Vertex::C), 0.0, kRelative);
  s.near("tangent law (3,4,5) pair (a,b)", tangent_law_residual(sss(3, 4, 5)), 0.0, kRelative);
  s.throws<DegenerateInput>("tangent law a = b",
                            [] { tangent_law_residual(solve_sas(1, 1, deg(50)).solutions[0]); });

  s.near("verify equilateral", verify(sss(1, 1, 1)).max_abs, 0.0, kExact);
  {
    TriangleSolution t = sss(3, 4, 5);
    t.angles[2] = deg(91.0);
    s.truth("verify C + 1 degree rejected", verify(t).max_abs > 1e-3);
  }
}

void solver_fixtures(Suite& s) {
  const double B345 = kB345, A345 = kA345, right = oracle::kPi / 2, sixty = oracle::kPi / 3;

  const SolutionSet asa_eq = solve_asa(deg(60), deg(60), 1);
  s.truth("asa equilateral unique", single(asa_eq, Taxonomy::Unique));
  expect_triangle(s, "asa equilateral", asa_eq.solutions.at(0), {1, 1, 1}, {sixty, sixty, sixty});
  expect_triangle(s, "asa 3-4-5", solve_asa(rad(B345), rad(right), 3).solutions.at(0), {3, 4, 5},
                  {A345, B345, right});
  s.throws<NoSolution>("asa (90,90,1)", [] { solve_asa(deg(90), deg(90), 1); });

  expect_triangle(s, "aas equilateral", solve_aas(deg(60), deg(60), 1).solutions.at(0), {1, 1, 1},
                  {sixty, sixty, sixty});
  expect_triangle(s, "aas 3-4-5", solve_aas(rad(A345), rad(B345), 3).solutions.at(0), {3, 4, 5},
                  {A345, B345, right});
  s.throws<NoSolution>("aas (170,20,1)", [] { solve_aas(deg(170), deg(20), 1); });

  {
    const SolutionSet two = solve_ssa(1, kSqrt2, deg(30));
    s.truth("ssa (1,sqrt2,30) two", two.taxonomy == Taxonomy::Two && two.size() == 2);
    const double b1 = oracle::kPi / 4, b2 = 3 * oracle::kPi / 4;
    expect_triangle(s, "ssa two first", two.solutions.at(0),
                    {1, kSqrt2, 2 * std::sin(7 * oracle::kPi / 12)},
                    {oracle::kPi / 6, b1, 7 * oracle::kPi / 12});
    expect_triangle(s, "ssa two second", two.solutions.at(1),
                    {1, kSqrt2, 2 * std::sin(oracle::kPi / 12)},
                    {oracle::kPi / 6, b2, oracle::kPi / 12});
  }
  {
    const SolutionSet tangent = solve_ssa(1, 2, deg(30));
    s.truth("ssa (1,2,30) tangent right", single(tangent, Taxonomy::TangentRight));
    expect_triangle(s, "ssa tangent", tangent.solutions.at(0), {1, 2, kSqrt3},
                    {oracle::kPi / 6, right, sixty});
  }
  s.truth("ssa (1,3,40) none", solve_ssa(1, 3, deg(40)).taxonomy == Taxonomy::None &&
                                   solve_ssa(1, 3, deg(40)).empty());
  {
    const SolutionSet unique = solve_ssa(5, 4, deg(120));
    s.truth("ssa (5,4,120) unique", single(unique, Taxonomy::Unique));
    const double B = std::asin(4 * std::sin(2 * oracle::kPi / 3) / 5);
    const oracle::Placed check(5, 4, unique.solutions.at(0).sides.c);
    s.near("ssa (5,4,120) B", unique.solutions.at(0).angles[1].degrees(), B * kDeg);
    s.near("ssa (5,4,120) C", unique.solutions.at(0).angles[2].degrees(), (sixty - B) * kDeg);
    s.near("ssa (5,4,120) A by oracle", check.angles()[0] * kDeg, 120.0);
  }
  s.truth("ssa isosceles", single(solve_ssa(2, 2, deg(50)), Taxonomy::Isosceles));
  s.truth("ssa isosceles obtuse none", solve_ssa(2, 2, deg(100)).empty());
  s.truth("ssa a<b obtuse none", solve_ssa(1, 1.5, deg(120)).empty());
  s.throws<InvalidInput>("ssa nonpositive side", [] { solve_ssa(0, 1, deg(30)); });

  expect_triangle(s, "sas equilateral", solve_sas(1, 1, deg(60)).solutions.at(0), {1, 1, 1},
                  {sixty, sixty, sixty});
  {
    const TriangleSolution t = solve_sas(5, 8, deg(60)).solutions.at(0);
    s.near("sas (5,8,60) c", t.sides.c, 7.0, kExact);
    s.near("sas (5,8,60) A", t.angles[0].degrees(), kA578 * kDeg);
    s.near("sas (5,8,60) B", t.angles[1].degrees(), kC578 * kDeg);
  }
  expect_triangle(s, "sas (3,4,90)", solve_sas(3, 4, deg(90)).solutions.at(0), {3, 4, 5},
                  {A345, B345, right});
  s.throws<InvalidInput>("sas angle out of range", [] { solve_sas(1, 1, deg(180)); });

  {
    const double delta = std::atan((3.0 / 13.0) * kSqrt3);
    const TriangleSolution t = solve_sas_tangent(8, 5, deg(60)).solutions.at(0);
    s.near("sas tangent (8,5,60) delta", 0.5 * (t.angles[0].degrees() - t.angles[1].degrees()),
           delta * kDeg);
    s.near("sas tangent (8,5,60) delta vs 5-7-8", delta, 0.5 * (kC578 - kA578));
    expect_triangle(s, "sas tangent (8,5,60)", t, {8, 5, 7}, {kC578, kA578, sixty});
  }
  expect_triangle(s, "sas tangent (1,1,90)", solve_sas_tangent(1, 1, deg(90)).solutions.at(0),
                  {1, 1, kSqrt2}, {oracle::kPi / 4, oracle::kPi / 4, right});
  {
    const double delta = std::atan(-1.0 / (5.0 * kSqrt3));
    const TriangleSolution t = solve_sas_tangent(2, 3, deg(120)).solutions.at(0);
    s.near("sas tangent (2,3,120) c", t.sides.c, std::sqrt(19.0));
    s.near("sas tangent (2,3,120) A", t.angles[0].degrees(), 30.0 + delta * kDeg);
    s.near("sas tangent (2,3,120) B", t.angles[1].degrees(), 30.0 - delta * kDeg);
    const oracle::Placed check(2, 3, std::sqrt(19.0));
    s.near("sas tangent (2,3,120) A by oracle", t.angles[0].radians(), check.angles()[0]);
  }

  expect_triangle(s, "sss (3,4,5)", sss(3, 4, 5), {3, 4, 5}, {A345, B345, right});
  expect_triangle(s, "sss (5,7,8)", sss(5, 7, 8), {5, 7, 8}, {kA578, kB578, kC578});
  s.truth("sss (1,2,3) none", solve_sss(1, 2, 3).empty());
  expect_triangle(s, "sss half-angle (5,7,8)",
                  solve_sss(5, 7, 8, {}, SssMethod::HalfAngle).solutions.at(0), {5, 7, 8},
                  {kA578, kB578, kC578});
  s.throws<InvalidInput>("sss nonpositive", [] { solve_sss(-1, 2, 2); });
}

void extended_fixtures(Suite& s) {
  const double sixty = oracle::kPi / 3, right = oracle::kPi / 2;
  expect_triangle(s, "perimeter (6,60,60)",
                  solve_perimeter_angles(6, deg(60), deg(60)).solutions.at(0), {2, 2, 2},
                  {sixty, sixty, sixty});
  expect_triangle(s, "perimeter (12,3-4-5)",
                  solve_perimeter_angles(12, rad(kA345), rad(kB345)).solutions.at(0), {3, 4, 5},
                  {kA345, kB345, right});
  s.throws<NoSolution>("perimeter (12,90,90)",
                       [] { solve_perimeter_angles(12, deg(90), deg(90)); });
  s.throws<InvalidInput>("perimeter zero", [] { solve_perimeter_angles(0, deg(50), deg(60)); });

  expect_triangle(s, "side sum (1,60,2)", solve_side_sum(1, deg(60), 2).solutions.at(0), {1, 1, 1},
                  {sixty, sixty, sixty});
  expect_triangle(s, "side sum (3,A,9)", solve_side_sum(3, rad(kA345), 9).solutions.at(0),
                  {3, 5, 4}, {kA345, right, kB345});
  s.truth("side sum (1,90,3) none", solve_side_sum(1, deg(90), 3).empty());
  s.throws<InvalidInput>("side sum b+c <= a", [] { solve_side_sum(3, deg(40), 3); });

  {
    const EllipseDiagnostics e = ellipse_diagnostics(3, rad(kA345), 9);
    s.near("ellipse a'", e.semi_major, 4.5, kExact);
    s.near("ellipse c'", e.semi_focal, 1.5, kExact);
    s.near("ellipse b'", e.semi_minor, std::sqrt(18.0), kExact);
    s.near("ellipse sin phi", std::sin(e.phi.radians()), 1.0 / 3.0);
    s.near("ellipse sin E", std::sin(e.eccentric_anomaly.radians()), 2.0 * kSqrt2 / 3.0);
    s.near("ellipse y0", e.apex_ordinate, 4.0);
    s.near("ellipse y0 = 2S/a", e.apex_ordinate, 2.0 * oracle::Placed(3, 5, 4).area() / 3.0);
    s.near("ellipse Y0", e.auxiliary_ordinate, 4.5 * 2.0 * kSqrt2 / 3.0);
  }
  {
    const EllipseDiagnostics e = ellipse_diagnostics(1, deg(60), 2);
    s.near("ellipse boundary phi", e.phi.degrees(), 30.0);
    s.near("ellipse boundary E", e.eccentric_anomaly.degrees(), 90.0);
    s.near("ellipse boundary y0", e.apex_ordinate, kSqrt3 / 2.0);
  }
  s.throws<NoSolution>("ellipse (2,90,2.9)", [] { ellipse_diagnostics(2, deg(90), 2.9); });
}

void metrics_fixtures(Suite& s) {
  auto all_areas = [&](const std::string& name, const TriangleSolution& t, double want) {
    const AreaBundle b = area_bundle(t);
    s.near(name + " S_sas", b.two_sides_included, want);
    s.near(name + " S_asa", b.side_two_angles, want);
    s.near(name + " S_heron", b.heron, want);
    s.near(name + " S_circum", b.circumradius, want);
    s.near(name + " S_inradius", b.inradius, want);
    s.near(name + " S_excircle_sq", b.excircle_squared, want * want);
  };
  all_areas("area (3,4,5)", sss(3, 4, 5), 6.0);
  all_areas("area equilateral", sss(1, 1, 1), kSqrt3 / 4.0);
  all_areas("area (5,7,8)", sss(5, 7, 8), 10.0 * kSqrt3);

  s.near("side sum area (3,A,9)", area_side_sum(3, rad(kA345), 9), 6.0);
  s.near("side sum area (1,60,2)", area_side_sum(1, deg(60), 2), kSqrt3 / 4.0);
  s.throws<NoSolution>("side sum area infeasible", [] { area_side_sum(1, deg(90), 3); });

  {
    const CircleData c = circle_data(sss(3, 4, 5));
    s.near("r (3,4,5)", c.inradius, 1.0, kExact);
    s.near("R (3,4,5)", c.circumradius, 2.5);
    s.near("r_a (3,4,5)", c.exradii[0], 2.0, kExact);
    s.near("r_b (3,4,5)", c.exradii[1], 3.0, kExact);
    s.near("r_c (3,4,5)", c.exradii[2], 6.0, kExact);
    const auto ex = oracle::Placed(3, 4, 5).exradii();
    for (std::size_t i = 0; i < 3; ++i) s.near("exradius (3,4,5) vs oracle", c.exradii[i], ex[i]);
  }
  {
    const CircleData c = circle_data(sss(1, 1, 1));
    s.near("r equilateral", c.inradius, 1.0 / (2.0 * kSqrt3));
    s.near("R equilateral", c.circumradius, 1.0 / kSqrt3);
    for (double r : c.exradii) s.near("exradius equilateral", r, kSqrt3 / 2.0);
  }
  {
    const CircleData c = circle_data(sss(5, 7, 8));
    s.near("r (5,7,8)", c.inradius, kSqrt3);
    s.near("R (5,7,8)", c.circumradius, 7.0 / kSqrt3);
    s.near("r_a (5,7,8)", c.exradii[0], 2.0 * kSqrt3);
    s.near("r_b (5,7,8)", c.exradii[1], 10.0 * kSqrt3 / 3.0);
    s.near("r_c (5,7,8)", c.exradii[2], 5.0 * kSqrt3);
  }

  {
    const ExcentralTriangle e = excentral_triangle(sss(1, 1, 1));
    for (Angle x : e.angles) s.near("excentral equilateral angle", x.degrees(), 60.0);
    for (double x : e.sides) s.near("excentral equilateral side", x, 2.0);
  }
  {
    const ExcentralTriangle e = excentral_triangle(sss(3, 4, 5));
    s.near("excentral (3,4,5) P", e.angles[0].degrees(), 90.0 - 0.5 * kA345 * kDeg);
    s.near("excentral (3,4,5) Q", e.angles[1].degrees(), 90.0 - 0.5 * kB345 * kDeg);
    s.near("excentral (3,4,5) R", e.angles[2].degrees(), 45.0);
    s.near("excentral (3,4,5) QR", e.sides[0], 3.0 * std::sqrt(10.0));
    s.near("excentral (3,4,5) RP", e.sides[1], 4.0 * std::sqrt(5.0));
    s.near("excentral (3,4,5) PQ", e.sides[2], 5.0 * kSqrt2);
    const TriangleSolution back = sss(e.sides[0], e.sides[1], e.sides[2]);
    for (std::size_t i = 0; i < 3; ++i) {
      s.near("excentral (3,4,5) sides give angles", back.angles[i].degrees(),
             e.angles[i].degrees());
    }
    // Excenters from coordinates.
    const oracle::Placed p(3, 4, 5);
    s.near("excentral (3,4,5) QR vs oracle", e.sides[0], oracle::dist(p.excenter(1), p.excenter(2)));
  }
}

void cevian_fixtures(Suite& s) {
  {
    const MedianData m = medians(sss(3, 4, 5));
    s.near("m_a (3,4,5)", m.lengths[0], std::sqrt(18.25));
    s.near("m_b (3,4,5)", m.lengths[1], std::sqrt(13.0));
    s.near("m_c (3,4,5)", m.lengths[2], 2.5);
    const auto o = oracle::Placed(3, 4, 5).medians();
    for (std::size_t i = 0; i < 3; ++i) s.near("median (3,4,5) vs oracle", m.lengths[i], o[i]);
  }
  {
    const MedianData m = medians(sss(1, 1, 1));
    for (double x : m.lengths) s.near("median equilateral", x, kSqrt3 / 2.0);
    s.near("median angle equilateral", m.angle_AMcC.degrees(), 90.0);
  }
  {
    const MedianData m = medians(sss(5, 7, 8));
    s.near("median angle (5,7,8)", m.angle_AMcC.degrees(), 90.0 + std::atan(kSqrt3 / 5.0) * kDeg);
    s.near("median angle (5,7,8) vs oracle", m.angle_AMcC.radians(),
           oracle::Placed(5, 7, 8).median_angle_c());
  }

  expect_triangle(s, "from medians (3,4,5)",
                  solve_from_medians(std::sqrt(18.25), std::sqrt(13.0), 2.5).solutions.at(0),
                  {3, 4, 5}, {kA345, kB345, oracle::kPi / 2});
  expect_triangle(s, "from medians equilateral",
                  solve_from_medians(kSqrt3 / 2, kSqrt3 / 2, kSqrt3 / 2).solutions.at(0),
                  {1, 1, 1}, {oracle::kPi / 3, oracle::kPi / 3, oracle::kPi / 3});
  s.truth("from medians (10,1,1) none", solve_from_medians(10, 1, 1).empty());
  s.throws<InvalidInput>("from medians nonpositive", [] { solve_from_medians(0, 1, 1); });

  {
    const BisectorData b = bisectors(sss(3, 4, 5));
    s.near("AD (3,4,5)", b.lengths[0], 4.0 * std::sqrt(10.0) / 3.0);
    s.near("CF (3,4,5)", b.lengths[2], 12.0 * kSqrt2 / 7.0);
    s.near("AI (3,4,5)", b.incenter_distances[0], std::sqrt(10.0));
    s.near("BI (3,4,5)", b.incenter_distances[1], std::sqrt(5.0));
    s.near("CI (3,4,5)", b.incenter_distances[2], kSqrt2);
    s.near("AI/AD (3,4,5)", b.ratios[0], 0.75);
    s.near("BI/BE (3,4,5)", b.ratios[1], 2.0 / 3.0);
    s.near("CI/CF (3,4,5)", b.ratios[2], 7.0 / 12.0);
    s.near("ratio sum (3,4,5)", b.ratios[0] + b.ratios[1] + b.ratios[2], 2.0);
    const oracle::Placed p(3, 4, 5);
    const oracle::Vec i = p.incenter();
    s.near("incenter (3,4,5) distance to CA", oracle::line_distance(i, p.A, p.C), 1.0);
    const auto lengths = p.bisector_lengths();
    const auto dists = p.incenter_distances();
    for (std::size_t k = 0; k < 3; ++k) {
      s.near("bisector (3,4,5) vs oracle", b.lengths[k], lengths[k]);
      s.near("incenter distance (3,4,5) vs oracle", b.incenter_distances[k], dists[k]);
    }
  }
  {
    const BisectorData b = bisectors(sss(1, 1, 1));
    for (double x : b.lengths) s.near("bisector equilateral", x, kSqrt3 / 2.0);
    for (double x : b.ratios) s.near("bisector ratio equilateral", x, 2.0 / 3.0);
    s.near("ratio sum equilateral", b.ratios[0] + b.ratios[1] + b.ratios[2], 2.0);
  }
  {
    const BisectorData b = bisectors(sss(5, 7, 8));
    s.near("AD (5,7,8)", b.lengths[0], std::sqrt(56.0) * std::sqrt(8.0 / 9.0));
    s.near("AD (5,7,8) vs oracle", b.lengths[0], oracle::Placed(5, 7, 8).bisector_lengths()[0]);
    s.near("BD/DC (5,7,8)", b.foot_segments[0] / b.foot_segments[1], 8.0 / 7.0);
  }

  {
    const AltitudeData h = altitudes(sss(3, 4, 5));
    s.near("h_a (3,4,5)", h.lengths[0], 4.0);
    s.near("h_b (3,4,5)", h.lengths[1], 3.0);
    s.near("h_c (3,4,5)", h.lengths[2], 2.4);
    s.near("harmonic altitudes (3,4,5)", 1 / h.lengths[0] + 1 / h.lengths[1] + 1 / h.lengths[2],
           1.0);
  }
  for (double x : altitudes(sss(2, 2, 2)).lengths) s.near("altitude equilateral 2", x, kSqrt3);
  {
    const AltitudeData h = altitudes(sss(5, 7, 8));
    s.near("h_a (5,7,8)", h.lengths[0], 4.0 * kSqrt3);
    s.near("h_b (5,7,8)", h.lengths[1], 20.0 * kSqrt3 / 7.0);
    s.near("h_c (5,7,8)", h.lengths[2], 5.0 * kSqrt3 / 2.0);
  }

  {
    const PedalTriangle p = pedal_triangle(sss(5, 7, 8));
    s.near("pedal EF (5,7,8)", p.sides[0], 55.0 / 14.0);
    s.near("pedal DF (5,7,8)", p.sides[1], 3.5);
    s.near("pedal DE (5,7,8)", p.sides[2], 8.0 / 7.0);
    s.near("pedal D (5,7,8)", p.angles[0].degrees(), 180.0 - 2.0 * kA578 * kDeg);
    s.near("pedal E (5,7,8)", p.angles[1].degrees(), 60.0);
    s.near("pedal F (5,7,8)", p.angles[2].degrees(), 180.0 - 2.0 * kC578 * kDeg);
    s.truth("pedal (5,7,8) not degenerate", !p.degenerate);
    const auto o = oracle::Placed(5, 7, 8).pedal_sides();
    for (std::size_t i = 0; i < 3; ++i) s.near("pedal (5,7,8) vs oracle", p.sides[i], o[i]);
  }
  {
    const PedalTriangle p = pedal_triangle(sss(1, 1, 1));
    for (double x : p.sides) s.near("pedal equilateral side", x, 0.5);
    for (Angle x : p.angles) s.near("pedal equilateral angle", x.degrees(), 60.0);
  }
  {
    const PedalTriangle p = pedal_triangle(sss(3, 4, 5));
    s.truth("pedal (3,4,5) degenerate", p.degenerate);
    s.near("pedal (3,4,5) DE", p.sides[2], 0.0, kExact);
  }

  expect_triangle(s, "from altitudes (4,3,2.4)", solve_from_altitudes(4, 3, 2.4).solutions.at(0),
                  {3, 4, 5}, {kA345, kB345, oracle::kPi / 2});
  expect_triangle(s, "from altitudes equilateral",
                  solve_from_altitudes(kSqrt3, kSqrt3, kSqrt3).solutions.at(0), {2, 2, 2},
                  {oracle::kPi / 3, oracle::kPi / 3, oracle::kPi / 3});
  {
    // Sides proportional to 1/h = (1, 1, 0.1) form a triangle, so a solution
    // must exist and reproduce the altitudes.
    const SolutionSet set = solve_from_altitudes(1, 1, 10);
    s.truth("from altitudes (1,1,10) solvable", set.size() == 1);
    if (set.size() == 1) {
      const auto& t = set.solutions[0];
      const auto o = oracle::Placed(t.sides.a, t.sides.b, t.sides.c).altitudes();
      s.near("from altitudes (1,1,10) h_a", o[0], 1.0);
      s.near("from altitudes (1,1,10) h_b", o[1], 1.0);
      s.near("from altitudes (1,1,10) h_c", o[2], 10.0);
    }
  }
  s.truth("from altitudes (1,1,0.4) none", solve_from_altitudes(1, 1, 0.4).empty());
  s.throws<InvalidInput>("from altitudes nonpositive", [] { solve_from_altitudes(1, -1, 1); });
}

Suite all_fixtures() {
  Suite s;
  core_fixtures(s);
  identity_fixtures(s);
  solver_fixtures(s);
  extended_fixtures(s);
  metrics_fixtures(s);
  cevian_fixtures(s);
  return s;
}

}  // namespace fixtures
