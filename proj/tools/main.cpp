#include <iostream>
#include <string>
#include <vector>

#include <pav/cli.hpp>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return pav::run_cli(args, std::cout, std::cerr);
}
