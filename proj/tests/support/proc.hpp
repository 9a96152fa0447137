#pragma once

#include <stdexcept>
#include <string>

namespace forno::testing {

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs a shell command, capturing both streams.
CommandResult run_command(const std::string& command);

// Scratch directory for files a test writes; created once per process.
std::string scratch_dir();

std::string write_scratch_file(const std::string& name, const std::string& content);

// Resolved per binary; only targets that know where the CLI was built
// define FORNO_CLI_PATH.
inline std::string cli_path() {
#ifdef FORNO_CLI_PATH
  return FORNO_CLI_PATH;
#else
  throw std::runtime_error("FORNO_CLI_PATH not configured for this binary");
#endif
}

}  // namespace forno::testing
