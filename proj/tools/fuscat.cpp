#include <iostream>

#include "fuscat/cli.hpp"

int main(int argc, char** argv) {
  return fuscat::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
