#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stpref/compile_expert.hpp"
#include "stpref/llm/chat.hpp"
#include "stpref/llm/generator.hpp"
#include "stpref/llm/judge.hpp"
#include "stpref/llm/mock.hpp"
#include "stpref/records.hpp"

namespace stpref {

namespace fs = std::filesystem;

// A chat-backed model or one of the offline stand-ins.
struct ModelBackendConfig {
  // generator: "http" | "mock"; judges: "http" | "oracle" | "scripted"
  std::string kind = "mock";
  std::string model;
  llm::HttpTransportConfig http;
  llm::MockCoderConfig mock;
  double malformed_rate = 0.0;  // oracle judge only
  fs::path scripted_dir;        // scripted judge only
};

struct RunConfig {
  std::string run_id = "run";
  fs::path run_root = "runs";

  int iterations = 9;                      // I
  std::size_t intents_per_iteration = 100; // N
  int responses_per_intent = 15;           // T
  int eval_samples_per_intent = 1;         // k
  std::size_t pair_cap = 64;               // 0 keeps every pair
  std::uint64_t seed = 0;
  int threads = 0;
  Decoding decoding;

  fs::path intents;
  fs::path sft;  // empty: base_model is used as θ_0 directly
  fs::path eval;
  fs::path base_model;

  ModelBackendConfig generator;
  ModelBackendConfig judge{"oracle"};
  ModelBackendConfig eval_judge{"oracle"};
  int max_format_retries = 2;
  std::size_t judge_batch_cap = 0;

  Backend compiler = Backend::builtin;
  ExternalCompiler external_compiler;

  // argv template with {mode} {dataset} {model_in} {model_out}
  std::string trainer_command;
  std::chrono::seconds trainer_timeout{24 * 3600};

  fs::path run_dir() const { return run_root / run_id; }
};

// Relative paths in the file are resolved against `base_dir`.
RunConfig config_from_json(const nlohmann::json& j, const fs::path& base_dir);
RunConfig load_config(const fs::path& file);
// Paths are written relative to `relative_to` so a run directory can move.
nlohmann::json config_to_json(const RunConfig& cfg, const fs::path& relative_to);
// Throws ConfigError naming the first violated constraint.
void validate(const RunConfig& cfg);

enum class TrainMode { sft, dpo };
const char* to_string(TrainMode m);

struct TrainRequest {
  TrainMode mode = TrainMode::dpo;
  fs::path dataset;
  fs::path model_in;
  fs::path model_out;
};

// External training step. Must leave a model at model_out or throw HookError.
class TrainerHook {
 public:
  virtual ~TrainerHook() = default;
  virtual void train(const TrainRequest& request) = 0;
};

// Runs the configured command template. Success means exit status 0 and an
// existing model_out; stderr is carried in the HookError otherwise.
class CommandHook : public TrainerHook {
 public:
  CommandHook(std::string command, std::chrono::seconds timeout);
  void train(const TrainRequest& request) override;

 private:
  std::string command_;
  std::chrono::seconds timeout_;
};

struct Components {
  std::shared_ptr<llm::Generator> generator;
  std::shared_ptr<llm::Judge> judge;
  std::shared_ptr<llm::Judge> eval_judge;
  std::shared_ptr<TrainerHook> hook;
  CompileExpert compiler = CompileExpert::builtin();
  // transports the generator and judges refer to
  std::vector<std::shared_ptr<llm::ChatTransport>> transports;
};

Components build_components(const RunConfig& cfg);

struct LoopOptions {
  // stop once this iteration is recorded (tests use it to simulate a crash)
  std::optional<int> stop_after;
  // progress and warnings; nullptr keeps the run silent
  std::ostream* log = nullptr;
};

// One run directory. Opening takes an exclusive lock on it and validates any
// existing run.json against the artifacts on disk.
class Run {
 public:
  Run(RunConfig cfg, Components components);
  ~Run();
  Run(const Run&) = delete;
  Run& operator=(const Run&) = delete;

  // Algorithm 1 line 1. Returns record 0; a no-op when it already exists.
  IterationRecord sft_stage();

  // Runs the SFT stage if needed, then every iteration not yet recorded.
  // Completed artifacts are reused, never rewritten.
  std::vector<IterationRecord> loop(const LoopOptions& options = {});

  const std::vector<IterationRecord>& records() const { return records_; }
  const fs::path& dir() const { return dir_; }

 private:
  IterationRecord run_iteration(int i);
  void append_record(IterationRecord rec);
  void write_run_json() const;
  void train_into(TrainMode mode, const fs::path& dataset, const fs::path& model_in, const fs::path& final_out);
  fs::path resolve(const std::string& stored) const;
  std::string relative(const fs::path& p) const;

  RunConfig cfg_;
  Components comp_;
  fs::path dir_;
  int lock_fd_ = -1;
  std::ostream* log_ = nullptr;
  std::vector<IterationRecord> records_;
  std::vector<Intent> corpus_;
  std::vector<Intent> eval_set_;
};

// Reads run.json; throws RunStateError when it is missing or corrupt.
std::vector<IterationRecord> load_run_records(const fs::path& run_dir);

// Loads <run_dir>/config.json, the configuration the run was started with.
RunConfig load_run_config(const fs::path& run_dir);

std::vector<IterationRecord> run_loop(const RunConfig& cfg, const LoopOptions& options = {});
std::vector<IterationRecord> resume(const fs::path& run_dir, const LoopOptions& options = {});

}  // namespace stpref
