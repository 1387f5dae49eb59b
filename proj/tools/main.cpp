#include <iostream>
#include <string>
#include <vector>

#include "glat/cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return glat::cli::cli_main(args, std::cin, std::cout, std::cerr);
}
