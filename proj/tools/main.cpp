#include <iostream>  // for cout, cerr

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto verdict = gsg::cli::run(args);
  std::cout << verdict.out;
  std::cerr << verdict.err;
  return verdict.exit_code;
}
