#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "stpref/compile_expert.hpp"
#include "stpref/llm/generator.hpp"
#include "stpref/llm/judge.hpp"
#include "stpref/records.hpp"

namespace stpref {

// One evaluated sample. `semantic` is empty when the judge was unavailable.
struct EvalSampleResult {
  std::string intent_id;
  std::string sample_id;
  std::string source;
  bool compiles = false;
  std::optional<bool> semantic;
};

// Compile rate, semantic rate and joint rate over the judged rows. Semantic
// success is counted over all judged samples, compiling or not. Throws
// std::invalid_argument on an empty input.
MetricsReport compute_metrics(std::span<const EvalSampleResult> results, int iteration = 0);

struct EvaluationOptions {
  int samples_per_intent = 1;  // k
  Decoding decoding;
  std::string model;
  int threads = 0;
};

struct Evaluation {
  MetricsReport report;
  std::vector<CodeSample> samples;  // with verdict and semantic label
};

// Samples k responses per eval intent from `policy`, compiles them and asks
// the evaluation judge about each one individually.
Evaluation run_evaluation(llm::Generator& generator, const llm::PolicyRef& policy, std::span<const Intent> eval_set,
                          const CompileExpert& compiler, llm::Judge& judge, int iteration,
                          const EvaluationOptions& options);

// metrics.csv (iteration,n,p_c,p_s,p_j) in iteration order; with `plot` also a
// gnuplot script metrics.gp next to it.
void emit_report(std::span<const MetricsReport> reports, const std::filesystem::path& dir, bool plot = false);

std::vector<MetricsReport> read_metrics_csv(const std::filesystem::path& path);

}  // namespace stpref
