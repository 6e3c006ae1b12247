#ifndef OBLIQUE_CLI_DOCUMENT_HPP_
#define OBLIQUE_CLI_DOCUMENT_HPP_

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oblique/cli/problem.hpp"

namespace oblique::cli {

struct ResidualView {
  std::array<double, 3> projection{};
  std::array<double, 2> mollweide{};
  double angle_sum_deg = 0.0;
  double max_abs = 0.0;

  bool operator==(const ResidualView&) const = default;
};

/// One solved triangle as reported: angles in degrees, derived blocks keyed
/// by block name ("areas", "circles", "cevians", "pedal").
struct SolutionRecord {
  std::string case_tag;
  std::array<double, 3> angles_deg{};  // A, B, C
  std::array<double, 3> sides{};       // a, b, c
  ResidualView residuals;
  nlohmann::ordered_json derived = nlohmann::ordered_json::object();

  bool operator==(const SolutionRecord&) const = default;
};

struct ResultDocument {
  ProblemSpec problem;
  std::string taxonomy = "NONE";
  bool verified = true;
  std::string diagnostic;  // empty when solved and verified
  std::vector<SolutionRecord> solutions;
  std::vector<std::string> errata_notes;

  /// 0 solved, 1 no solution or failed verification.
  int exit_code() const { return solutions.empty() || !verified ? 1 : 0; }
  bool operator==(const ResultDocument&) const = default;
};

/// Dispatches to the solver for the case and assembles the document.
/// Input errors (InvalidInput, DomainError, DegenerateInput) propagate.
ResultDocument run(const ProblemSpec& spec);

/// Infinite residuals serialize as null and read back as infinity.
nlohmann::ordered_json to_json(const ResultDocument& doc);
ResultDocument document_from_json(const nlohmann::ordered_json& j);

/// Shortest decimal that reads back to the same double.
std::string format_number(double x);

/// Aligned human-readable rendering.
void write_table(const ResultDocument& doc, std::ostream& out);

}  // namespace oblique::cli

#endif  // OBLIQUE_CLI_DOCUMENT_HPP_
