#pragma once

#include <chrono>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace stpref {

struct ProcessResult {
  int exit_code = -1;
  bool timed_out = false;
  bool spawn_failed = false;
  std::string stdout_text;
  std::string stderr_text;
  double duration_ms = 0.0;

  bool ok() const { return !timed_out && !spawn_failed && exit_code == 0; }
};

// Runs argv[0] (PATH lookup) in its own process group with no shell. On
// timeout the whole group is killed. Captured output is capped at
// `max_output` bytes per stream.
ProcessResult run_process(const std::vector<std::string>& argv, std::chrono::milliseconds timeout,
                          std::size_t max_output = 1 << 20);

// Splits a command template into argv: whitespace separates words, single and
// double quotes group, backslash escapes the next character outside single
// quotes. Throws ConfigError on an unterminated quote.
std::vector<std::string> split_command(std::string_view command);

// Replaces every "{name}" occurrence inside each word. Unknown placeholders
// are left as-is.
std::vector<std::string> expand_command(const std::vector<std::string>& words,
                                        const std::map<std::string, std::string>& values);

}  // namespace stpref
