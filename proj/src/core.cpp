#include "oblique/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oblique {

double Sides::max() const { return std::max({a, b, c}); }
double Sides::min() const { return std::min({a, b, c}); }

void Tolerances::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(classification) || !positive(residual) || !positive(degenerate)) {
    throw InvalidInput("tolerances must be strictly positive");
  }
  if (classification > residual) {
    throw InvalidInput("classification tolerance must not exceed residual tolerance");
  }
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Asa: return "ASA";
    case CaseTag::Aas: return "AAS";
    case CaseTag::Ssa: return "SSA";
    case CaseTag::Sas: return "SAS";
    case CaseTag::SasTangent: return "SAS_TANGENT";
    case CaseTag::Sss: return "SSS";
    case CaseTag::Perimeter: return "PERIMETER";
    case CaseTag::SideSum: return "SIDE_SUM";
    case CaseTag::FromMedians: return "FROM_MEDIANS";
    case CaseTag::FromAltitudes: return "FROM_ALTITUDES";
  }
  return "?";
}

std::string_view to_string(Taxonomy taxonomy) {
  switch (taxonomy) {
    case Taxonomy::None: return "NONE";
    case Taxonomy::Unique: return "UNIQUE";
    case Taxonomy::TangentRight: return "TANGENT_RIGHT";
    case Taxonomy::Two: return "TWO";
    case Taxonomy::Isosceles: return "ISOSCELES";
  }
  return "?";
}

std::string_view to_string(SideVerdict::Status status) {
  switch (status) {
    case SideVerdict::Status::Valid: return "valid";
    case SideVerdict::Status::Degenerate: return "degenerate";
    case SideVerdict::Status::Invalid: return "invalid";
  }
  return "?";
}

SideVerdict validate_sides(const Sides& s, const Tolerances& tol) {
  constexpr std::array<const char*, 3> kNames = {"a", "b", "c"};
  for (Vertex v : kVertices) {
    if (!(std::isfinite(s[v]) && s[v] > 0.0)) {
      return {SideVerdict::Status::Invalid, std::string(kNames[static_cast<std::size_t>(v)]) + " > 0"};
    }
  }

  const double margin = tol.degenerate * s.perimeter();
  // Each check is y + z > x, written in the order the side names appear.
  constexpr std::array<const char*, 3> kLabels = {"b + c > a", "c + a > b", "a + b > c"};
  SideVerdict verdict;
  for (Vertex v : kVertices) {
    const double slack = s[next(v)] + s[prev(v)] - s[v];
    const char* label = kLabels[static_cast<std::size_t>(v)];
    if (slack < -margin) {
      return {SideVerdict::Status::Invalid, label};
    }
    if (slack <= margin && verdict.valid()) {
      verdict = {SideVerdict::Status::Degenerate, label};
    }
  }
  return verdict;
}

double semiperimeter(const Sides& s) { return 0.5 * s.perimeter(); }

double deficit(const Sides& s, Vertex v) {
  return 0.5 * (s[next(v)] + s[prev(v)] - s[v]);
}

Angle included_angle(double adjacent1, double adjacent2, double opposite) {
  // Kahan's needle-triangle form: with a >= b every parenthesised difference
  // below is exact or of same-sign terms, so no rounded a + b is ever
  // subtracted from c and small or near-straight angles keep their digits.
  const double a = std::max(adjacent1, adjacent2);
  const double b = std::min(adjacent1, adjacent2);
  const double c = opposite;
  const double mu = b >= c ? c - (a - b) : b - (a - c);
  const double num = ((a - b) + c) * mu;
  const double den = (a + (b + c)) * ((a - c) + b);
  return Angle::from_radians(
      2.0 * std::atan2(std::sqrt(std::max(0.0, num)), std::sqrt(std::max(0.0, den))));
}

bool nearly_equal(double x, double y, double rel) {
  return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y));
}

bool angles_equal(Angle x, Angle y, const Tolerances& tol) {
  return std::abs(x.radians() - y.radians()) <= tol.classification * kPi;
}

void require_positive(double value, std::string_view name) {
  if (!(std::isfinite(value) && value > 0.0)) {
    throw InvalidInput(std::string(name) + " must be a positive length");
  }
}

void require_interior(Angle angle, std::string_view name) {
  if (!(std::isfinite(angle.radians()) && angle.is_interior())) {
    throw InvalidInput(std::string(name) + " must lie strictly between 0 and 180 degrees");
  }
}

}  // namespace oblique
