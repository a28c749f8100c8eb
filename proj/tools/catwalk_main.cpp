#include <iostream>
#include <string>
#include <vector>

#include "catwalk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return catwalk::run_cli(args, std::cout, std::cerr);
}
