#include <iostream>

#include "omdual/cli.hpp"

int main(int argc, char** argv) {
  return omdual::cli::run(argc, argv, std::cout, std::cerr);
}
