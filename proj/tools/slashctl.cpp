#include <iostream>
#include <string>
#include <vector>

#include "slash/cli_run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  slash::RunResult rr = slash::run_cli(args);
  if (!rr.out.empty()) std::cout << rr.out;
  if (!rr.err.empty()) std::cerr << rr.err;
  return rr.exit_code;
}
