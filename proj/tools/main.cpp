#include <iostream>
#include <string>
#include <vector>

#include "menger/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return menger::cli::run(args, std::cout, std::cerr);
}
