#include <iostream>

#include "gbcode/cli.hpp"

int main(int argc, char** argv) {
  return gbcode::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
