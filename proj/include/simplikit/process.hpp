#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace simplikit {

struct ProcessResult {
  int exit_code = -1;
  bool timed_out = false;
  /// Combined stdout and stderr, truncated to the last `output_limit` bytes.
  std::string output;
};

/// Runs `command` under /bin/sh -c in its own process group. On timeout the
/// whole group is killed. Throws ValidationError("io-failure") when the
/// process cannot be started.
ProcessResult run_command(const std::string& command, const std::filesystem::path& cwd, double timeout_seconds,
                          const std::map<std::string, std::string>& env = {}, std::size_t output_limit = 1 << 16);

}  // namespace simplikit
