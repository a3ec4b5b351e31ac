#include <iostream>
#include <string>
#include <vector>

#include "agperf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return agperf::cli::run(args, std::cout, std::cerr);
}
