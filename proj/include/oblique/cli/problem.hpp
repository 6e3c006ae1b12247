#ifndef OBLIQUE_CLI_PROBLEM_HPP_
#define OBLIQUE_CLI_PROBLEM_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oblique/core.hpp"

namespace oblique::cli {

/// Malformed problem: unknown case, missing or extra field, unparsable number.
/// `field()` names the offending field when there is one.
class ParseError : public InvalidInput {
 public:
  ParseError(std::string message, std::string field = {})
      : InvalidInput(std::move(message)), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// An angle outside (0, 180) degrees after unit conversion.
class UnitError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

enum class ProblemCase {
  Asa,
  Aas,
  Ssa,
  Sas,
  SasTangent,
  Sss,
  Perimeter,
  SideSum,
  FromMedians,
  FromAltitudes,
};

enum class AngleUnit { Deg, Rad };

struct FieldSpec {
  std::string_view name;
  bool is_angle;
};

std::string_view to_string(ProblemCase c);
std::string_view to_string(AngleUnit u);
ProblemCase parse_case(std::string_view name);
AngleUnit parse_unit(std::string_view name);

/// Required fields of a case, in canonical order.
std::span<const FieldSpec> fields_of(ProblemCase c);

/// Derived blocks requested alongside the solutions.
struct Blocks {
  bool areas = false;
  bool circles = false;
  bool cevians = false;
  bool pedal = false;

  static Blocks all() { return {true, true, true, true}; }
  bool operator==(const Blocks&) const = default;
};

struct ProblemSpec {
  ProblemCase kind = ProblemCase::Sss;
  std::vector<std::pair<std::string, double>> values;  // canonical field order
  AngleUnit unit = AngleUnit::Deg;
  std::optional<double> tolerance;  // residual acceptance override
  Blocks blocks;

  double value(std::string_view name) const;
  /// Named angle field converted to an Angle; UnitError outside (0, 180) degrees.
  Angle angle(std::string_view name) const;
  Tolerances tolerances() const;

  bool operator==(const ProblemSpec&) const = default;
};

/// Builds a spec from `name -> value` pairs in any order. Throws ParseError
/// naming the first missing or unexpected field, UnitError for angles out of
/// range, InvalidInput for a bad tolerance.
ProblemSpec make_problem(ProblemCase kind, const std::vector<std::pair<std::string, double>>& given,
                         AngleUnit unit = AngleUnit::Deg,
                         std::optional<double> tolerance = std::nullopt, Blocks blocks = {});

/// Field tokens from the command line: `--name value` or `--name=value`.
std::vector<std::pair<std::string, double>> parse_field_tokens(
    const std::vector<std::string>& tokens);

/// Batch entry: {"case": "sss", "a": 3, ..., "unit": "deg", "tol": 1e-9,
/// "all": true, "areas": true, ...}. Every other key is a field.
ProblemSpec problem_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const ProblemSpec& spec);

}  // namespace oblique::cli

#endif  // OBLIQUE_CLI_PROBLEM_HPP_
