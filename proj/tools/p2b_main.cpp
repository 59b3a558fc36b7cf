#include <iostream>

#include "p2b/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return p2b::cli::run(args, std::cout, std::cerr);
}
