#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sylloprobe {

// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitDisagreement = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "SYLLOPROBE_OUT_DIR";

// Runs the tool with argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sylloprobe
