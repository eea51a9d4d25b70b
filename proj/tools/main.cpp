#include <iostream>

#include "laurent_lab/cli.hpp"

int main(int argc, char** argv) {
  return laurent_lab::run_cli(argc, argv, std::cout, std::cerr);
}
