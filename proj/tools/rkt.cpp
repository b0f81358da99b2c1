#include <iostream>
#include <string>
#include <vector>

#include "rainbow_kernels/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const rainbow_kernels::CommandOutcome outcome = rainbow_kernels::run(args);
  std::cout << outcome.report_text;
  std::cerr << outcome.error_text;
  return outcome.exit_code;
}
