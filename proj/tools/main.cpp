#include <iostream>

#include "sah/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sah::cli::run(args, std::cout, std::cerr);
}
