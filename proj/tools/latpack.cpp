#include <iostream>

#include "latpack/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latpack::cli::run(args, std::cout, std::cerr);
}
