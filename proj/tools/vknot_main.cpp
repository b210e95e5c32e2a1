#include <iostream>
#include <string>
#include <vector>

#include "vknot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vknot::cli::run(args, std::cout, std::cerr);
}
