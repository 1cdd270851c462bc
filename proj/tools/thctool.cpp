#include <iostream>
#include <string>
#include <vector>

#include "thc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return thc::cli::run(std::move(args), std::cout, std::cerr);
}
