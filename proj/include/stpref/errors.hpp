#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stpref {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid or inconsistent run configuration. Raised before any work starts.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed dataset file. `line` is 1-based, 0 when the file as a whole is bad.
class DatasetError : public Error {
 public:
  DatasetError(const std::string& file, std::size_t line, const std::string& what)
      : Error(file + (line ? ":" + std::to_string(line) : std::string()) + ": " + what), file_(file), line_(line) {}
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// Chat endpoint failure after the transport's own retries, or a
// non-retryable status.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, int status = 0, bool retryable = false)
      : Error(what), status_(status), retryable_(retryable) {}
  int status() const { return status_; }
  bool retryable() const { return retryable_; }

 private:
  int status_;
  bool retryable_;
};

// A judge reply that does not follow the bracket protocol.
class FormatError : public Error {
 public:
  using Error::Error;
};

// The judge could not produce a well-formed verdict within its retry budget.
class JudgeUnavailable : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

// Trainer hook exited non-zero, timed out or produced no model.
class HookError : public Error {
 public:
  using Error::Error;
};

// Run directory is locked, corrupt, or inconsistent with its artifacts.
class RunStateError : public Error {
 public:
  using Error::Error;
};

// An evaluation intent leaked into a training preference set.
class LeakageError : public Error {
 public:
  using Error::Error;
};

}  // namespace stpref
