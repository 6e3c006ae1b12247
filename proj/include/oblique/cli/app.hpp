#ifndef OBLIQUE_CLI_APP_HPP_
#define OBLIQUE_CLI_APP_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace oblique::cli {

enum ExitCode : int { kSolved = 0, kNoSolution = 1, kInputError = 2 };

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oblique::cli

#endif  // OBLIQUE_CLI_APP_HPP_
