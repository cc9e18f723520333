#include <iostream>
#include <string>
#include <vector>

#include "tableaux/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tableaux::run_cli(args, std::cin, std::cout, std::cerr);
}
