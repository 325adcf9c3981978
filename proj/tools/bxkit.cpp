#include <iostream>

#include "bx/cli.hpp"

int main(int argc, char** argv) {
  return bx::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
