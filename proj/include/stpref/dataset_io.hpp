#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stpref/errors.hpp"
#include "stpref/records.hpp"

namespace stpref {

using json = nlohmann::json;

// JSON mappings. Readers ignore unknown fields; enums use snake-case strings
// ("compiler-split" style for provenance and skip reasons).
void to_json(json& j, const Intent& v);
void from_json(const json& j, Intent& v);
void to_json(json& j, const SftPair& v);
void from_json(const json& j, SftPair& v);
void to_json(json& j, const Decoding& v);
void from_json(const json& j, Decoding& v);
void to_json(json& j, const CompileVerdict& v);
void from_json(const json& j, CompileVerdict& v);
void to_json(json& j, const CodeSample& v);
void from_json(const json& j, CodeSample& v);
void to_json(json& j, const PreferenceRecord& v);
void from_json(const json& j, PreferenceRecord& v);
void to_json(json& j, const SampleLabel& v);
void from_json(const json& j, SampleLabel& v);
void to_json(json& j, const IntentOutcome& v);
void from_json(const json& j, IntentOutcome& v);
void to_json(json& j, const SourceBreakdown& v);
void from_json(const json& j, SourceBreakdown& v);
void to_json(json& j, const MetricsReport& v);
void from_json(const json& j, MetricsReport& v);
void to_json(json& j, const IterationRecord& v);
void from_json(const json& j, IterationRecord& v);

Split split_from_string(const std::string& s);
Provenance provenance_from_string(const std::string& s);
SkipReason skip_reason_from_string(const std::string& s);

// Reads every non-blank line of a JSONL file. A parse or schema failure throws
// DatasetError naming the 1-based line.
std::vector<json> read_jsonl(const std::filesystem::path& path);

template <class T>
std::vector<T> read_jsonl_as(const std::filesystem::path& path) {
  std::vector<T> out;
  std::size_t line = 0;
  std::ifstream in(path);
  if (!in) throw DatasetError(path.string(), 0, "cannot open file");
  std::string text;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(json::parse(text).get<T>());
    } catch (const std::exception& e) {
      throw DatasetError(path.string(), line, e.what());
    }
  }
  return out;
}

// Intents: ids must be unique and texts non-empty.
std::vector<Intent> load_intents(const std::filesystem::path& path);
std::vector<SftPair> load_sft_pairs(const std::filesystem::path& path);
std::vector<CodeSample> load_samples(const std::filesystem::path& path);
std::vector<PreferenceRecord> load_preferences(const std::filesystem::path& path);
std::vector<IntentOutcome> load_outcomes(const std::filesystem::path& path);

// Appends one JSON object per line and flushes after each record. Never
// truncates an existing file.
class JsonlWriter {
 public:
  explicit JsonlWriter(const std::filesystem::path& path);
  void write(const json& record);
  template <class T>
  void write_all(std::span<const T> records) {
    for (const auto& r : records) write(json(r));
  }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

// Whole-file writes go to a sibling temporary and are renamed into place, so a
// crash never leaves a half-written artifact behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

template <class T>
void write_jsonl_atomic(const std::filesystem::path& path, std::span<const T> records) {
  std::string out;
  for (const auto& r : records) {
    out += json(r).dump();
    out += '\n';
  }
  write_file_atomic(path, out);
}

template <class T>
void write_jsonl_atomic(const std::filesystem::path& path, const std::vector<T>& records) {
  write_jsonl_atomic(path, std::span<const T>(records));
}

// Selection of the per-iteration intent subset.
class SelectionStrategy {
 public:
  virtual ~SelectionStrategy() = default;
  virtual std::vector<Intent> select(std::span<const Intent> pool, std::size_t n, std::uint64_t seed) const = 0;
};

// Uniform without replacement (partial Fisher-Yates on a seeded mt19937_64).
class UniformSelection : public SelectionStrategy {
 public:
  std::vector<Intent> select(std::span<const Intent> pool, std::size_t n, std::uint64_t seed) const override;
};

// Draws n intents from the train split. Throws ConfigError when n exceeds the
// number of train intents.
std::vector<Intent> sample_intents(std::span<const Intent> corpus, std::size_t n, const SelectionStrategy& strategy,
                                   std::uint64_t seed);

}  // namespace stpref
