#include <iostream>
#include <string>
#include <vector>

#include "moltm/cli.hpp"

int main(int argc, char** argv) {
  return moltm::cli::main(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
