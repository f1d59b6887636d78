#pragma once

#include <string>
#include <vector>

namespace pn {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// The whole CLI as a library call (exit code 0 = success, 1 = internal
/// invariant violation, 2 = invalid input). main() is a thin wrapper.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace pn
