#include <iostream>
#include <string>
#include <vector>

#include "oblique/cli/app.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return oblique::cli::run_cli(args, std::cout, std::cerr);
}
