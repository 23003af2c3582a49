#include <iostream>
#include <string>
#include <vector>

#include "burniat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return burniat::cli::run(args, std::cout, std::cerr);
}
