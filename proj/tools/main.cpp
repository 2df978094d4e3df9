#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return toric::cli::cli_dispatch(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
