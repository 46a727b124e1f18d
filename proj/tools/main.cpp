#include <iostream>

#include "tourlab/cli.hpp"

int main(int argc, char** argv) {
  return tourlab::run_cli(argc, argv, std::cout, std::cerr);
}
