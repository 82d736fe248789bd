#include <iostream>

#include "chemgenus/cli.hpp"

int main(int argc, char** argv) {
  return chemgenus::run_cli(argc, argv, std::cout, std::cerr);
}
