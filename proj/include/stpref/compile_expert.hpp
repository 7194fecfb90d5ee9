#pragma once

#include <chrono>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stpref/records.hpp"

namespace stpref {

struct ExternalCompiler {
  // argv template; "{source}" is replaced by the path of a temporary .st file
  std::string command;
  std::chrono::milliseconds timeout{30000};
};

// The syntactic expert E_S: a compile verdict per code sample. The builtin
// backend is the in-process ST front end; the external backend runs a
// reference compiler and uses only its exit status.
class CompileExpert {
 public:
  static CompileExpert builtin();
  static CompileExpert external(ExternalCompiler cfg);

  Backend backend() const { return backend_; }

  // Deterministic for a fixed backend. An external timeout or spawn failure
  // yields a failed verdict carrying an E-EXT-BACKEND diagnostic.
  CompileVerdict label(std::string_view source) const;

  // Order-stable: result[i] belongs to samples[i]. `threads` <= 0 uses the
  // OpenMP default.
  std::vector<CompileVerdict> label_batch(std::span<const CodeSample> samples, int threads = 0) const;

  // Single-threaded reference for label_batch.
  std::vector<CompileVerdict> label_batch_serial(std::span<const CodeSample> samples) const;

 private:
  CompileExpert(Backend b, ExternalCompiler cfg) : backend_(b), external_(std::move(cfg)) {}

  CompileVerdict label_builtin(std::string_view source) const;
  CompileVerdict label_external(std::string_view source) const;

  Backend backend_;
  ExternalCompiler external_;
};

// Attaches verdicts to samples that do not carry one yet.
void attach_verdicts(std::vector<CodeSample>& samples, const CompileExpert& expert, int threads = 0);

}  // namespace stpref
