#include <iostream>
#include <string>
#include <vector>

#include "shamsuddin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return static_cast<int>(shamsuddin::run_command_line(args, std::cout, std::cerr));
}
