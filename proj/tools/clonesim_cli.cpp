#include <iostream>
#include <string>
#include <vector>

#include "clonesim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return clonesim::cli::run(args, std::cout, std::cerr);
}
