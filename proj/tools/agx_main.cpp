#include <iostream>
#include <vector>

#include "agx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return agx::cli_run(args, std::cin, std::cout, std::cerr);
}
