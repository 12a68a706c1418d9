#include <iostream>

#include "swrbd/cli.hpp"

int main(int argc, char** argv) {
  return swrbd::cli::cli_main(argc, argv, std::cout, std::cerr);
}
