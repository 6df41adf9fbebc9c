#include <iostream>
#include <string>
#include <vector>

#include "richgrass/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return richgrass::run_cli(args, std::cout, std::cerr);
}
