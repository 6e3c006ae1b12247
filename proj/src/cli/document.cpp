#include "oblique/cli/document.hpp"

#include <cmath>
#include <iomanip>
#include <limits>

#include "oblique/cevians.hpp"
#include "oblique/extended.hpp"
#include "oblique/identities.hpp"
#include "oblique/metrics.hpp"
#include "oblique/solver.hpp"

namespace oblique::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSideSumAreaNote =
    "side-sum area is b'^2 tan(A/2), half the base times the apex height; "
    "the printed a'b' tan(A/2) uses the auxiliary-circle ordinate";
constexpr const char* kBisectorNote =
    "bisector CF angular form is a sin B / cos((A-B)/2); the printed cosine form is wrong";

SolutionSet dispatch(const ProblemSpec& p, const Tolerances& tol) {
  switch (p.kind) {
    case ProblemCase::Asa: return solve_asa(p.angle("B"), p.angle("C"), p.value("a"), tol);
    case ProblemCase::Aas: return solve_aas(p.angle("A"), p.angle("B"), p.value("a"), tol);
    case ProblemCase::Ssa: return solve_ssa(p.value("a"), p.value("b"), p.angle("A"), tol);
    case ProblemCase::Sas: return solve_sas(p.value("a"), p.value("b"), p.angle("C"), tol);
    case ProblemCase::SasTangent:
      return solve_sas_tangent(p.value("a"), p.value("b"), p.angle("C"), tol);
    case ProblemCase::Sss: return solve_sss(p.value("a"), p.value("b"), p.value("c"), tol);
    case ProblemCase::Perimeter:
      return solve_perimeter_angles(p.value("perimeter"), p.angle("A"), p.angle("B"), tol);
    case ProblemCase::SideSum:
      return solve_side_sum(p.value("a"), p.angle("A"), p.value("b_plus_c"), tol);
    case ProblemCase::FromMedians:
      return solve_from_medians(p.value("m_a"), p.value("m_b"), p.value("m_c"), tol);
    case ProblemCase::FromAltitudes:
      return solve_from_altitudes(p.value("h_a"), p.value("h_b"), p.value("h_c"), tol);
  }
  throw ParseError("unknown case");
}

std::string none_diagnostic(const ProblemSpec& p, const Tolerances& tol) {
  if (p.kind == ProblemCase::Sss) {
    const SideVerdict v = validate_sides({p.value("a"), p.value("b"), p.value("c")}, tol);
    return "no triangle: sides are " + std::string(to_string(v.status)) + " (" + v.violated +
           " fails)";
  }
  return "no triangle satisfies the given values";
}

Json area_block(const TriangleSolution& t, const ProblemSpec& p, const Tolerances& tol) {
  const AreaBundle areas = area_bundle(t, tol);
  Json j;
  j["S_sas"] = areas.two_sides_included;
  j["S_asa"] = areas.side_two_angles;
  j["S_heron"] = areas.heron;
  j["S_circum"] = areas.circumradius;
  j["S_inradius"] = areas.inradius;
  j["S_excircle_sq"] = areas.excircle_squared;
  if (p.kind == ProblemCase::SideSum) {
    j["S_side_sum"] = area_side_sum(p.value("a"), p.angle("A"), p.value("b_plus_c"), tol);
  }
  return j;
}

Json circle_block(const TriangleSolution& t, const Tolerances& tol) {
  const CircleData circles = circle_data(t, tol);
  const ExcentralTriangle ex = excentral_triangle(t);
  Json j;
  j["r"] = circles.inradius;
  j["R"] = circles.circumradius;
  j["r_a"] = circles.exradii[0];
  j["r_b"] = circles.exradii[1];
  j["r_c"] = circles.exradii[2];
  j["excentral_P"] = ex.angles[0].degrees();
  j["excentral_Q"] = ex.angles[1].degrees();
  j["excentral_R"] = ex.angles[2].degrees();
  j["excentral_QR"] = ex.sides[0];
  j["excentral_RP"] = ex.sides[1];
  j["excentral_PQ"] = ex.sides[2];
  return j;
}

Json cevian_block(const TriangleSolution& t, const Tolerances& tol) {
  const MedianData m = medians(t);
  const BisectorData bis = bisectors(t, tol);
  const AltitudeData h = altitudes(t);
  Json j;
  j["m_a"] = m.lengths[0];
  j["m_b"] = m.lengths[1];
  j["m_c"] = m.lengths[2];
  j["angle_AMcC"] = m.angle_AMcC.degrees();
  constexpr std::array<const char*, 3> kLengths = {"AD", "BE", "CF"};
  constexpr std::array<const char*, 6> kFeet = {"BD", "DC", "AE", "EC", "AF", "FB"};
  constexpr std::array<const char*, 3> kIncenter = {"AI", "BI", "CI"};
  constexpr std::array<const char*, 3> kRatios = {"AI/AD", "BI/BE", "CI/CF"};
  for (std::size_t i = 0; i < 3; ++i) j[kLengths[i]] = bis.lengths[i];
  for (std::size_t i = 0; i < 6; ++i) j[kFeet[i]] = bis.foot_segments[i];
  for (std::size_t i = 0; i < 3; ++i) j[kIncenter[i]] = bis.incenter_distances[i];
  for (std::size_t i = 0; i < 3; ++i) j[kRatios[i]] = bis.ratios[i];
  j["h_a"] = h.lengths[0];
  j["h_b"] = h.lengths[1];
  j["h_c"] = h.lengths[2];
  return j;
}

Json pedal_block(const TriangleSolution& t, const Tolerances& tol) {
  const PedalTriangle pedal = pedal_triangle(t, tol);
  Json j;
  j["EF"] = pedal.sides[0];
  j["DF"] = pedal.sides[1];
  j["DE"] = pedal.sides[2];
  j["D"] = pedal.angles[0].degrees();
  j["E"] = pedal.angles[1].degrees();
  j["F"] = pedal.angles[2].degrees();
  j["degenerate"] = pedal.degenerate;
  return j;
}

Json residual_number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double read_residual(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

void write_values(const Json& block, std::ostream& out, const std::string& indent) {
  std::size_t width = 0;
  for (const auto& [key, v] : block.items()) width = std::max(width, key.size());
  for (const auto& [key, v] : block.items()) {
    out << indent << std::left << std::setw(static_cast<int>(width) + 2) << key;
    if (v.is_number()) {
      out << format_number(v.get<double>());
    } else if (v.is_boolean()) {
      out << (v.get<bool>() ? "yes" : "no");
    } else {
      out << v.dump();
    }
    out << '\n';
  }
}

}  // namespace

std::string format_number(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  return Json(x).dump();
}

ResultDocument run(const ProblemSpec& spec) {
  const Tolerances tol = spec.tolerances();
  ResultDocument doc;
  doc.problem = spec;

  SolutionSet set;
  try {
    set = dispatch(spec, tol);
  } catch (const NoSolution& e) {
    doc.diagnostic = std::string("no triangle: ") + e.what();
    return doc;
  } catch (const VerificationFailure& e) {
    doc.verified = false;
    doc.diagnostic = e.what();
    return doc;
  }
  doc.taxonomy = to_string(set.taxonomy);
  if (set.empty()) {
    doc.diagnostic = none_diagnostic(spec, tol);
    return doc;
  }

  for (const TriangleSolution& t : set.solutions) {
    SolutionRecord rec;
    rec.case_tag = to_string(t.case_tag);
    rec.angles_deg = {t.angles[0].degrees(), t.angles[1].degrees(), t.angles[2].degrees()};
    rec.sides = {t.sides.a, t.sides.b, t.sides.c};
    const ResidualReport report = verify(t, tol);
    rec.residuals = {report.projection, report.mollweide, report.angle_sum_deg, report.max_abs};
    if (!report.accepted(tol)) {
      doc.verified = false;
      doc.diagnostic = "verification failed: max residual " + format_number(report.max_abs);
    }
    if (spec.blocks.areas) rec.derived["areas"] = area_block(t, spec, tol);
    if (spec.blocks.circles) rec.derived["circles"] = circle_block(t, tol);
    if (spec.blocks.cevians) rec.derived["cevians"] = cevian_block(t, tol);
    if (spec.blocks.pedal) rec.derived["pedal"] = pedal_block(t, tol);
    doc.solutions.push_back(std::move(rec));
  }
  if (spec.blocks.areas && spec.kind == ProblemCase::SideSum) {
    doc.errata_notes.emplace_back(kSideSumAreaNote);
  }
  if (spec.blocks.cevians) doc.errata_notes.emplace_back(kBisectorNote);
  return doc;
}

nlohmann::ordered_json to_json(const ResultDocument& doc) {
  Json j;
  j["problem"] = to_json(doc.problem);
  j["taxonomy"] = doc.taxonomy;
  j["verified"] = doc.verified;
  j["diagnostic"] = doc.diagnostic;
  Json solutions = Json::array();
  for (const SolutionRecord& rec : doc.solutions) {
    Json s;
    s["case_tag"] = rec.case_tag;
    s["A"] = rec.angles_deg[0];
    s["B"] = rec.angles_deg[1];
    s["C"] = rec.angles_deg[2];
    s["a"] = rec.sides[0];
    s["b"] = rec.sides[1];
    s["c"] = rec.sides[2];
    Json r;
    r["projection"] = Json::array();
    for (double x : rec.residuals.projection) r["projection"].push_back(residual_number(x));
    r["mollweide"] = Json::array();
    for (double x : rec.residuals.mollweide) r["mollweide"].push_back(residual_number(x));
    r["angle_sum_deg"] = residual_number(rec.residuals.angle_sum_deg);
    r["max_abs"] = residual_number(rec.residuals.max_abs);
    s["residuals"] = r;
    if (!rec.derived.empty()) s["derived"] = rec.derived;
    solutions.push_back(s);
  }
  j["solutions"] = solutions;
  j["errata_notes"] = doc.errata_notes;
  return j;
}

ResultDocument document_from_json(const nlohmann::ordered_json& j) {
  ResultDocument doc;
  doc.problem = problem_from_json(j.at("problem"));
  doc.taxonomy = j.at("taxonomy").get<std::string>();
  doc.verified = j.at("verified").get<bool>();
  doc.diagnostic = j.at("diagnostic").get<std::string>();
  for (const Json& s : j.at("solutions")) {
    SolutionRecord rec;
    rec.case_tag = s.at("case_tag").get<std::string>();
    rec.angles_deg = {s.at("A").get<double>(), s.at("B").get<double>(), s.at("C").get<double>()};
    rec.sides = {s.at("a").get<double>(), s.at("b").get<double>(), s.at("c").get<double>()};
    const Json& r = s.at("residuals");
    for (std::size_t i = 0; i < 3; ++i) {
      rec.residuals.projection[i] = read_residual(r.at("projection").at(i));
    }
    for (std::size_t i = 0; i < 2; ++i) {
      rec.residuals.mollweide[i] = read_residual(r.at("mollweide").at(i));
    }
    rec.residuals.angle_sum_deg = read_residual(r.at("angle_sum_deg"));
    rec.residuals.max_abs = read_residual(r.at("max_abs"));
    if (s.contains("derived")) rec.derived = s.at("derived");
    doc.solutions.push_back(std::move(rec));
  }
  doc.errata_notes = j.at("errata_notes").get<std::vector<std::string>>();
  return doc;
}

void write_table(const ResultDocument& doc, std::ostream& out) {
  out << "case      " << to_string(doc.problem.kind) << '\n';
  out << "input    ";
  for (const auto& [key, v] : doc.problem.values) out << ' ' << key << '=' << format_number(v);
  out << " (" << to_string(doc.problem.unit) << ")\n";
  out << "taxonomy  " << doc.taxonomy << '\n';
  out << "verified  " << (doc.verified ? "yes" : "no") << '\n';
  if (!doc.diagnostic.empty()) out << "note      " << doc.diagnostic << '\n';

  constexpr std::array<const char*, 3> kAngles = {"A", "B", "C"};
  constexpr std::array<const char*, 3> kSides = {"a", "b", "c"};
  for (std::size_t n = 0; n < doc.solutions.size(); ++n) {
    const SolutionRecord& rec = doc.solutions[n];
    out << "\nsolution " << n + 1 << "  " << rec.case_tag << '\n';
    for (std::size_t i = 0; i < 3; ++i) {
      out << "  " << kAngles[i] << "  " << std::left << std::setw(24)
          << format_number(rec.angles_deg[i]) << kSides[i] << "  " << format_number(rec.sides[i])
          << '\n';
    }
    out << "  max residual  " << format_number(rec.residuals.max_abs) << '\n';
    for (const auto& [name, block] : rec.derived.items()) {
      out << "  [" << name << "]\n";
      write_values(block, out, "    ");
    }
  }
  if (!doc.errata_notes.empty()) {
    out << '\n';
    for (const std::string& note : doc.errata_notes) out << "erratum: " << note << '\n';
  }
}

}  // namespace oblique::cli
