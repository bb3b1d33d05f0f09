#include <iostream>

#include "ordwork/cli.hpp"

int main(int argc, char** argv) {
  return ordwork::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
