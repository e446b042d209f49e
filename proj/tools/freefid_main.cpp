#include <iostream>

#include "freefid/cli.hpp"

int main(int argc, char** argv) {
  return freefid::run_cli(argc, argv, std::cout, std::cerr);
}
