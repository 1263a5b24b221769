#include <iostream>
#include <string>
#include <vector>

#include "sylloprobe/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sylloprobe::run_cli(args, std::cout, std::cerr);
}
