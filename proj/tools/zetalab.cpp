#include <iostream>
#include <string>
#include <vector>

#include "zetalab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zetalab::cmd_dispatch(args, std::cout, std::cerr);
}
