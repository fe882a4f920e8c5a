#include <iostream>

#include "qhad_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qhad::cli::run(args, std::cout, std::cerr, std::cin);
}
