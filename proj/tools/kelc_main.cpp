#include <unistd.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "kelc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kelc::cli::Run(args, std::cout, std::cerr, isatty(fileno(stderr)) != 0);
}
