#include <iostream>

#include "gmix/cli/commands.hpp"

int main(int argc, char** argv) {
  return gmix::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
