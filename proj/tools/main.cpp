#include <iostream>
#include <string>
#include <vector>

#include "bernalg/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return bernalg::run_cli(args, std::cin, std::cout, std::cerr);
}
