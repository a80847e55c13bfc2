#include <iostream>
#include <string>
#include <vector>

#include "special_locus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return special_locus::run_cli(args, std::cout, std::cerr);
}
