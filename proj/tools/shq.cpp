#include <iostream>

#include "shq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  shq::cli::RunResult res = shq::cli::run_args(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
