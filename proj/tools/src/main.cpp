#include <iostream>

#include "cstates_cli/commands.hpp"

int main(int argc, char** argv) {
  return cstates::cli::run_cli(argc, argv, std::cout, std::cerr);
}
