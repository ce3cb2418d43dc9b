#include <iostream>

#include "btinv/cli.hpp"

int main(int argc, char** argv) {
  return btinv::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
