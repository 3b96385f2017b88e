#include <iostream>

#include "dlens/cli.hpp"

int main(int argc, char** argv) {
  return dlens::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
