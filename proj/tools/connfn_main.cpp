#include <iostream>

#include "connfn/cli.hpp"

int main(int argc, char** argv) {
  return connfn::run_cli(argc, argv, std::cout, std::cerr);
}
