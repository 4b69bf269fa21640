#include <iostream>

#include "deer_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return deer::cli::run(args, std::cout, std::cerr);
}
