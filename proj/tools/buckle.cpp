#include "buckle/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return buckle::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
