#include "oblique/cli/problem.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

namespace oblique::cli {
namespace {

struct CaseEntry {
  ProblemCase kind;
  std::string_view name;
  std::array<FieldSpec, 3> fields;
};

constexpr std::array<CaseEntry, 10> kCases = {{
    {ProblemCase::Asa, "asa", {{{"B", true}, {"C", true}, {"a", false}}}},
    {ProblemCase::Aas, "aas", {{{"A", true}, {"B", true}, {"a", false}}}},
    {ProblemCase::Ssa, "ssa", {{{"a", false}, {"b", false}, {"A", true}}}},
    {ProblemCase::Sas, "sas", {{{"a", false}, {"b", false}, {"C", true}}}},
    {ProblemCase::SasTangent, "sas-tangent", {{{"a", false}, {"b", false}, {"C", true}}}},
    {ProblemCase::Sss, "sss", {{{"a", false}, {"b", false}, {"c", false}}}},
    {ProblemCase::Perimeter, "perimeter", {{{"perimeter", false}, {"A", true}, {"B", true}}}},
    {ProblemCase::SideSum, "side-sum", {{{"a", false}, {"A", true}, {"b_plus_c", false}}}},
    {ProblemCase::FromMedians, "from-medians", {{{"m_a", false}, {"m_b", false}, {"m_c", false}}}},
    {ProblemCase::FromAltitudes,
     "from-altitudes",
     {{{"h_a", false}, {"h_b", false}, {"h_c", false}}}},
}};

const CaseEntry& entry(ProblemCase c) {
  return *std::find_if(kCases.begin(), kCases.end(),
                       [c](const CaseEntry& e) { return e.kind == c; });
}

double parse_number(const std::string& text, const std::string& field) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError("field " + field + ": not a finite number: '" + text + "'", field);
  }
  return value;
}

constexpr std::array<std::string_view, 8> kControlKeys = {
    "case", "unit", "tol", "all", "areas", "circles", "cevians", "pedal"};

bool is_control_key(std::string_view key) {
  return std::find(kControlKeys.begin(), kControlKeys.end(), key) != kControlKeys.end();
}

}  // namespace

std::string_view to_string(ProblemCase c) { return entry(c).name; }

std::string_view to_string(AngleUnit u) { return u == AngleUnit::Deg ? "deg" : "rad"; }

ProblemCase parse_case(std::string_view name) {
  for (const CaseEntry& e : kCases) {
    if (e.name == name) return e.kind;
  }
  throw ParseError("unknown case '" + std::string(name) + "'", "case");
}

AngleUnit parse_unit(std::string_view name) {
  if (name == "deg") return AngleUnit::Deg;
  if (name == "rad") return AngleUnit::Rad;
  throw ParseError("unknown unit '" + std::string(name) + "' (expected deg or rad)", "unit");
}

std::span<const FieldSpec> fields_of(ProblemCase c) { return entry(c).fields; }

double ProblemSpec::value(std::string_view name) const {
  for (const auto& [key, v] : values) {
    if (key == name) return v;
  }
  throw ParseError("missing field " + std::string(name), std::string(name));
}

Angle ProblemSpec::angle(std::string_view name) const {
  const double raw = value(name);
  const Angle out = unit == AngleUnit::Deg ? Angle::from_degrees(raw) : Angle::from_radians(raw);
  if (!out.is_interior()) {
    throw UnitError("angle " + std::string(name) + " must lie in (0, 180) degrees");
  }
  return out;
}

Tolerances ProblemSpec::tolerances() const {
  Tolerances tol;
  if (tolerance) {
    tol.residual = *tolerance;
    tol.classification = std::min(tol.classification, *tolerance);
  }
  tol.validate();
  return tol;
}

ProblemSpec make_problem(ProblemCase kind, const std::vector<std::pair<std::string, double>>& given,
                         AngleUnit unit, std::optional<double> tolerance, Blocks blocks) {
  ProblemSpec spec;
  spec.kind = kind;
  spec.unit = unit;
  spec.tolerance = tolerance;
  spec.blocks = blocks;

  const auto fields = fields_of(kind);
  for (const auto& [key, v] : given) {
    const bool known = std::any_of(fields.begin(), fields.end(),
                                   [&](const FieldSpec& f) { return f.name == key; });
    if (!known) {
      throw ParseError("unexpected field " + key + " for case " + std::string(to_string(kind)),
                       key);
    }
    const auto dup = std::count_if(given.begin(), given.end(),
                                   [&](const auto& p) { return p.first == key; });
    if (dup > 1) throw ParseError("field " + key + " given more than once", key);
  }
  for (const FieldSpec& f : fields) {
    const auto it = std::find_if(given.begin(), given.end(),
                                 [&](const auto& p) { return p.first == f.name; });
    if (it == given.end()) {
      throw ParseError("missing field " + std::string(f.name), std::string(f.name));
    }
    spec.values.emplace_back(std::string(f.name), it->second);
  }
  for (const FieldSpec& f : fields) {
    if (f.is_angle) spec.angle(f.name);
  }
  spec.tolerances();
  return spec;
}

std::vector<std::pair<std::string, double>> parse_field_tokens(
    const std::vector<std::string>& tokens) {
  std::vector<std::pair<std::string, double>> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (tok.size() < 3 || tok.compare(0, 2, "--") != 0) {
      throw ParseError("unexpected argument '" + tok + "'", tok);
    }
    const std::string body = tok.substr(2);
    const auto eq = body.find('=');
    if (eq != std::string::npos) {
      const std::string name = body.substr(0, eq);
      out.emplace_back(name, parse_number(body.substr(eq + 1), name));
      continue;
    }
    if (i + 1 == tokens.size()) throw ParseError("field " + body + " has no value", body);
    out.emplace_back(body, parse_number(tokens[++i], body));
  }
  return out;
}

ProblemSpec problem_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw ParseError("problem must be an object");
  if (!j.contains("case") || !j["case"].is_string()) {
    throw ParseError("missing field case", "case");
  }
  const ProblemCase kind = parse_case(j["case"].get<std::string>());
  AngleUnit unit = AngleUnit::Deg;
  if (j.contains("unit")) {
    if (!j["unit"].is_string()) throw ParseError("unit must be a string", "unit");
    unit = parse_unit(j["unit"].get<std::string>());
  }
  std::optional<double> tol;
  if (j.contains("tol")) {
    if (!j["tol"].is_number()) throw ParseError("tol must be a number", "tol");
    tol = j["tol"].get<double>();
  }
  auto flag = [&](const char* key) {
    if (!j.contains(key)) return false;
    if (!j[key].is_boolean()) throw ParseError(std::string(key) + " must be a boolean", key);
    return j[key].get<bool>();
  };
  Blocks blocks = flag("all") ? Blocks::all() : Blocks{};
  blocks.areas = blocks.areas || flag("areas");
  blocks.circles = blocks.circles || flag("circles");
  blocks.cevians = blocks.cevians || flag("cevians");
  blocks.pedal = blocks.pedal || flag("pedal");

  std::vector<std::pair<std::string, double>> given;
  for (const auto& [key, v] : j.items()) {
    if (is_control_key(key)) continue;
    if (!v.is_number()) throw ParseError("field " + key + " must be a number", key);
    given.emplace_back(key, v.get<double>());
  }
  return make_problem(kind, given, unit, tol, blocks);
}

nlohmann::ordered_json to_json(const ProblemSpec& spec) {
  nlohmann::ordered_json j;
  j["case"] = to_string(spec.kind);
  j["unit"] = to_string(spec.unit);
  for (const auto& [key, v] : spec.values) j[key] = v;
  if (spec.tolerance) j["tol"] = *spec.tolerance;
  if (spec.blocks.areas) j["areas"] = true;
  if (spec.blocks.circles) j["circles"] = true;
  if (spec.blocks.cevians) j["cevians"] = true;
  if (spec.blocks.pedal) j["pedal"] = true;
  return j;
}

}  // namespace oblique::cli
