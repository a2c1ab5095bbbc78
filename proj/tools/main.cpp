#include <iostream>
#include <string>
#include <vector>

#include "cliffq/cli/driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cliffq::cli::run(args, std::cout, std::cerr);
}
