#include <iostream>

#include "qeff/cli.hpp"

int main(int argc, char** argv) {
  return qeff::cli::run(argc, argv, std::cout, std::cerr);
}
