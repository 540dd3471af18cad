#include <iostream>
#include <string>
#include <vector>

#include "redwords/cli.hpp"

int main(int argc, char** argv) {
  return redwords::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
