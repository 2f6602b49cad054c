#include <iostream>

#include "secantq/cli.hpp"

int main(int argc, char** argv) {
  return secantq::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
