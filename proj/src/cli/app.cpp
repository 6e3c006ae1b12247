#include "oblique/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "oblique/cli/document.hpp"
#include "oblique/cli/errata.hpp"
#include "oblique/cli/problem.hpp"

namespace oblique::cli {
namespace {

using Json = nlohmann::ordered_json;

struct BatchItem {
  std::optional<ResultDocument> doc;
  std::string error;  // input error when doc is empty

  int exit_code() const { return doc ? doc->exit_code() : kInputError; }
};

BatchItem run_item(const Json& j) {
  try {
    return {run(problem_from_json(j)), {}};
  } catch (const TriangleError& e) {
    return {std::nullopt, e.what()};
  } catch (const Json::exception& e) {
    return {std::nullopt, e.what()};
  }
}

int solve_command(const std::string& case_name, const std::vector<std::string>& extras,
                  const std::string& unit, std::optional<double> tol, Blocks blocks, bool json,
                  std::ostream& out, std::ostream& err) {
  ResultDocument doc;
  try {
    const ProblemSpec spec = make_problem(parse_case(case_name), parse_field_tokens(extras),
                                          parse_unit(unit), tol, blocks);
    doc = run(spec);
  } catch (const TriangleError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (json) {
    out << to_json(doc).dump(2) << '\n';
  } else {
    write_table(doc, out);
  }
  if (!doc.diagnostic.empty()) err << doc.diagnostic << '\n';
  return doc.exit_code();
}

int batch_command(const std::string& path, unsigned jobs, bool json, std::ostream& out,
                  std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open " << path << '\n';
    return kInputError;
  }
  Json problems;
  try {
    problems = Json::parse(in);
  } catch (const Json::parse_error& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return kInputError;
  }
  if (!problems.is_array()) {
    err << "error: " << path << ": expected an array of problems\n";
    return kInputError;
  }

  // Chunks of `jobs` problems run concurrently; results keep input order.
  std::vector<BatchItem> items(problems.size());
  jobs = std::max(1u, jobs);
  for (std::size_t start = 0; start < problems.size(); start += jobs) {
    const std::size_t stop = std::min(problems.size(), start + jobs);
    std::vector<std::future<BatchItem>> pending;
    for (std::size_t i = start; i < stop; ++i) {
      pending.push_back(std::async(std::launch::async, run_item, std::cref(problems[i])));
    }
    for (std::size_t i = start; i < stop; ++i) items[i] = pending[i - start].get();
  }

  int worst = kSolved;
  Json all = Json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const BatchItem& item = items[i];
    worst = std::max(worst, item.exit_code());
    if (!item.doc) err << "problem " << i + 1 << ": error: " << item.error << '\n';
    if (json) {
      if (item.doc) {
        all.push_back(to_json(*item.doc));
      } else {
        Json e;
        e["error"] = item.error;
        e["exit_code"] = kInputError;
        all.push_back(e);
      }
      continue;
    }
    if (i > 0) out << '\n';
    out << "=== problem " << i + 1 << '\n';
    if (item.doc) {
      write_table(*item.doc, out);
    } else {
      out << "error     " << item.error << '\n';
    }
  }
  if (json) out << all.dump(2) << '\n';
  return worst;
}

int errata_command(bool json, std::ostream& out) {
  const std::vector<ErratumCheck> checks = check_errata();
  bool ok = true;
  Json all = Json::array();
  for (const ErratumCheck& c : checks) {
    ok = ok && c.passed();
    if (json) {
      Json j;
      j["name"] = c.name;
      j["fixture"] = c.fixture;
      j["corrected"] = c.corrected;
      j["printed"] = c.printed;
      j["reference"] = c.reference;
      j["discrepancy"] = c.printed - c.reference;
      j["passed"] = c.passed();
      all.push_back(j);
      continue;
    }
    out << c.name << "  (" << c.fixture << ")\n";
    out << "  corrected    " << format_number(c.corrected) << '\n';
    out << "  printed      " << format_number(c.printed) << '\n';
    out << "  reference    " << format_number(c.reference) << '\n';
    out << "  discrepancy  " << format_number(c.printed - c.reference) << '\n';
    out << "  " << (c.passed() ? "confirmed" : "NOT CONFIRMED") << '\n';
  }
  if (json) out << all.dump(2) << '\n';
  return ok ? kSolved : kNoSolution;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve oblique triangles and report derived quantities", "oblique"};
  app.require_subcommand(0, 1);
  bool errata_flag = false;
  app.add_flag("--check-errata", errata_flag, "Run the erratum regression checks");

  std::string case_name;
  std::string unit = "deg";
  std::optional<double> tol;
  bool json = false;
  bool all = false;
  Blocks blocks;
  CLI::App* solve = app.add_subcommand("solve", "Solve one problem");
  solve->add_option("case", case_name, "asa aas ssa sas sas-tangent sss perimeter side-sum "
                                       "from-medians from-altitudes")
      ->required();
  solve->add_option("--unit", unit, "Angle unit of the inputs: deg or rad");
  solve->add_option("--tol", tol, "Residual acceptance tolerance");
  solve->add_flag("--json", json, "Machine-readable output");
  solve->add_flag("--all", all, "All derived blocks");
  solve->add_flag("--areas", blocks.areas, "Area by every route");
  solve->add_flag("--circles", blocks.circles, "Inradius, circumradius, exradii, excentral triangle");
  solve->add_flag("--cevians", blocks.cevians, "Medians, bisectors, altitudes");
  solve->add_flag("--pedal", blocks.pedal, "Triangle of the altitude feet");
  solve->allow_extras();
  solve->footer("Fields are given as --name value, e.g. solve sss --a 3 --b 4 --c 5");

  std::string path;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  CLI::App* batch = app.add_subcommand("batch", "Solve a JSON array of problems");
  batch->add_option("file", path)->required();
  batch->add_option("--jobs", jobs, "Problems evaluated concurrently");
  batch->add_flag("--json", json);

  CLI::App* errata = app.add_subcommand("check-errata", "Run the erratum regression checks");
  errata->add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSolved : kInputError;
  }

  if (*solve) {
    if (all) blocks = Blocks::all();
    return solve_command(case_name, solve->remaining(), unit, tol, blocks, json, out, err);
  }
  if (*batch) return batch_command(path, jobs, json, out, err);
  if (*errata || errata_flag) return errata_command(json, out);
  out << app.help();
  return kInputError;
}

}  // namespace oblique::cli
