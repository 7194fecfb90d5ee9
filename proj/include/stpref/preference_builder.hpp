#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stpref/compile_expert.hpp"
#include "stpref/llm/judge.hpp"
#include "stpref/records.hpp"

namespace stpref {

// Samples of one intent divided by the two experts.
struct ExpertSplit {
  std::vector<CodeSample> positives;
  std::vector<CodeSample> negatives;
  std::size_t n_compiling = 0;
  // no sample compiled, so the judge saw all of them
  bool fallback = false;
  std::optional<SkipReason> skip;
};

// Compiles every sample (reusing verdicts already attached), judges the
// compiling subset (or everything when nothing compiles) and returns the
// labelled split. Non-compiling samples are negatives unless the fallback
// judged them. Both output lists keep the input order. A judge failure sets
// skip = judge_unavailable instead of throwing.
ExpertSplit split_by_experts(const Intent& intent, std::span<const CodeSample> samples,
                             const CompileExpert& compiler, llm::Judge& judge);

// Every (positive, negative) pair in positive-major order. When the product
// exceeds `cap` (> 0), a seeded uniform subset of `cap` pairs is kept, still
// in positive-major order.
std::vector<PreferenceTriple> build_triples(const Intent& intent, const ExpertSplit& split, std::size_t cap = 0,
                                            std::uint64_t seed = 0);

struct PreferenceOptions {
  std::size_t pair_cap = 64;
  std::uint64_t seed = 0;
  int threads = 0;
};

struct IterationDataset {
  std::vector<PreferenceTriple> triples;
  std::vector<IntentOutcome> outcomes;  // one per intent, in intent order
};

// D_i for one iteration. `samples` holds the T samples of every intent, in
// any order; intents without samples get an all-negative outcome with zero
// samples. Triples are grouped by intent in intent order.
IterationDataset build_iteration_dataset(std::span<const Intent> intents, std::span<const CodeSample> samples,
                                         const CompileExpert& compiler, llm::Judge& judge,
                                         const PreferenceOptions& options);

}  // namespace stpref
