#include <iostream>

#include "slcg/cli.hpp"

int main(int argc, char** argv) {
  return slcg::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
