#include <iostream>
#include <string>
#include <vector>

#include "drinfeld/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return drinfeld::cli::run(args, std::cout, std::cerr);
}
