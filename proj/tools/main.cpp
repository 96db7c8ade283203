#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return cyclecon::cli::cli_main(argc, argv, std::cout, std::cerr);
}
