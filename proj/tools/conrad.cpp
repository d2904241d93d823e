#include <iostream>
#include <string>
#include <vector>

#include "conrad/cli_io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  args.front() = "conrad";
  auto outcome = conrad::run_command(args);
  std::cout << outcome.output;
  std::cerr << outcome.error;
  return outcome.status;
}
