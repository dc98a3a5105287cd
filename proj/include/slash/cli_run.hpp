#pragma once

#include <string>
#include <vector>

namespace slash {

// In-process CLI entry point, so tests can drive the tool without spawning.
// exit codes: 0 all verdicts positive, 1 a verdict negative (the report on
// `out` names the clause and witness), 2 input error (diagnostics on `err`).
struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args);

}  // namespace slash
