#pragma once

#include <string>
#include <vector>

namespace tkr {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs one CLI invocation in-process. Exit codes: 0 success, 1 usage error,
// 2 operational error (stderr carries "error: <Code>: <message>").
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace tkr
