#include <iostream>

#include "cli/dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return iwb::cli::dispatch(args, std::cin, std::cout, std::cerr);
}
