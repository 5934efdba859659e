#include <iostream>

#include "lefkit/cli.hpp"

int main(int argc, char** argv) {
  return lefkit::run_cli(argc, argv, std::cout, std::cerr);
}
