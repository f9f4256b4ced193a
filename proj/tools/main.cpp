#include <iostream>
#include <string>
#include <vector>

#include "eriordan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return eriordan::cli::run(args, std::cout, std::cerr);
}
