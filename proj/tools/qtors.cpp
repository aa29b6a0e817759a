#include <iostream>

#include "qtors/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qtors::run_cli(args, std::cout, std::cerr);
}
