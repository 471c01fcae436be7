#include <iostream>

#include "ttg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ttg::cli::run(args, std::cout, std::cerr);
}
