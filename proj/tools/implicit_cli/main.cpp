#include <iostream>
#include <string>
#include <vector>

#include "implicit_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return implicit::cli::run(args, std::cout, std::cerr);
}
