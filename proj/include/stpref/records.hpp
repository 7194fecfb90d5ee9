#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stpref/st/diagnostic.hpp"

// Plain data records shared by every pipeline stage. Their JSON form lives in
// dataset_io.
namespace stpref {

enum class Split { sft, train, eval };

struct Intent {
  std::string id;
  std::string text;
  std::string source;  // corpus tag, e.g. "oscat" or "apps"
  Split split = Split::train;

  friend bool operator==(const Intent&, const Intent&) = default;
};

struct SftPair {
  std::string intent_id;
  std::string prompt;
  std::string response;

  friend bool operator==(const SftPair&, const SftPair&) = default;
};

struct Decoding {
  double temperature = 0.8;
  double top_p = 0.95;
  int max_tokens = 1024;

  friend bool operator==(const Decoding&, const Decoding&) = default;
};

enum class Backend { builtin, external };

struct CompileVerdict {
  bool success = false;
  st::Diagnostics diagnostics;
  Backend backend = Backend::builtin;
  double duration_ms = 0.0;

  friend bool operator==(const CompileVerdict&, const CompileVerdict&) = default;
};

enum class SemanticLabel { positive, negative };

struct CodeSample {
  std::string id;
  std::string intent_id;
  std::string text;
  std::string model_id;
  Decoding decoding;
  int iteration = 0;
  std::optional<CompileVerdict> verdict;
  std::optional<SemanticLabel> semantic;

  friend bool operator==(const CodeSample&, const CodeSample&) = default;
};

enum class Provenance { compiler_split, judge_split, fallback_judge_split };

struct PreferenceTriple {
  Intent intent;
  CodeSample winner;
  CodeSample loser;
  Provenance provenance = Provenance::compiler_split;
};

// On-disk form of a triple: the prompt/chosen/rejected columns DPO trainers
// expect, plus ids for traceability.
struct PreferenceRecord {
  std::string intent_id;
  std::string prompt_text;
  std::string chosen_text;
  std::string rejected_text;
  Provenance provenance = Provenance::compiler_split;
  std::string chosen_id;
  std::string rejected_id;

  friend bool operator==(const PreferenceRecord&, const PreferenceRecord&) = default;
};

PreferenceRecord to_record(const PreferenceTriple& t);

enum class SkipReason { all_positive, all_negative, judge_unavailable };

struct SampleLabel {
  std::string sample_id;
  bool compiles = false;
  std::optional<SemanticLabel> semantic;

  friend bool operator==(const SampleLabel&, const SampleLabel&) = default;
};

// Per-intent result of preference construction.
struct IntentOutcome {
  std::string intent_id;
  std::size_t n_samples = 0;
  std::size_t n_compiling = 0;
  std::size_t n_positive = 0;
  std::size_t n_negative = 0;
  std::size_t n_triples = 0;
  bool fallback = false;
  std::optional<SkipReason> skip_reason;
  std::vector<SampleLabel> labels;

  friend bool operator==(const IntentOutcome&, const IntentOutcome&) = default;
};

struct SourceBreakdown {
  std::size_t n = 0;
  double p_c = 0.0;
  double p_s = 0.0;
  double p_j = 0.0;

  friend bool operator==(const SourceBreakdown&, const SourceBreakdown&) = default;
};

struct MetricsReport {
  int iteration = 0;
  std::size_t n = 0;
  std::size_t n_compiles = 0;
  std::size_t n_semantic = 0;
  std::size_t n_joint = 0;
  double p_c = 0.0;
  double p_s = 0.0;
  double p_j = 0.0;
  std::map<std::string, SourceBreakdown> by_source;
  // rows whose semantic label is missing (judge unavailable); excluded from n
  std::size_t n_unjudged = 0;
  bool incomplete = false;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

// One entry of the run ledger. Iteration 0 is the SFT stage. Paths are
// relative to the run directory unless they point outside it.
struct IterationRecord {
  int iteration = 0;
  std::vector<std::string> intent_ids;
  std::string dataset;
  std::size_t triple_count = 0;
  std::string model_in;
  std::string model_out;
  bool degenerate = false;
  int dpo_updates = 0;
  std::optional<MetricsReport> metrics;
  std::string started_at;
  std::string finished_at;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

const char* to_string(Split s);
const char* to_string(Backend b);
const char* to_string(SemanticLabel l);
const char* to_string(Provenance p);
const char* to_string(SkipReason r);

}  // namespace stpref
