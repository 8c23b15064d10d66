#include <iostream>

#include "rotkit/commands.hpp"

int main(int argc, char** argv) {
  return rotkit::cli::run(argc, argv, std::cout, std::cerr);
}
