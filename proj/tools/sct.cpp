#include <iostream>
#include <string>
#include <vector>

#include "sct/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sct::dispatch(std::move(args), std::cout, std::cerr);
}
