#include <iostream>
#include <string>
#include <vector>

#include "hrecolor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hrecolor::run_cli(args, std::cout, std::cerr);
}
