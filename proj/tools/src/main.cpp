#include <iostream>
#include <string>
#include <vector>

#include "harmsum/cli.hpp"

int main(int argc, char** argv) {
  return harmsum::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
