#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <string_view>

#include "stpref/llm/chat.hpp"
#include "stpref/llm/generator.hpp"

// Offline stand-ins for the code model and the judge. They exist so the whole
// loop can run without an inference endpoint; none of this models how a real
// model learns.
namespace stpref::llm {

// Compile and semantic propensities grow linearly with the number of DPO
// updates applied to the policy, capped at max_rate.
struct MockCoderConfig {
  std::uint64_t seed = 0;
  double base_compile = 0.07;
  double compile_step = 0.07;
  double base_semantic = 0.325;
  double semantic_step = 0.015;
  double max_rate = 0.95;
};

double mock_compile_rate(const MockCoderConfig& cfg, int dpo_updates);
double mock_semantic_rate(const MockCoderConfig& cfg, int dpo_updates);

// Marker the oracle judge reads back out of generated code.
inline constexpr std::string_view kMockSemanticTrue = "(* mock:semantic=1 *)";
inline constexpr std::string_view kMockSemanticFalse = "(* mock:semantic=0 *)";

// A small ST program for `intent`. `compiles` selects a clean program or one
// with an injected defect; `semantic` selects the marker. `variant` picks
// the defect and program shape.
std::string mock_program(const Intent& intent, std::uint64_t variant, bool compiles, bool semantic);

// Each (intent, sample index) gets fixed uniform draws, so a sample that
// compiles under a policy also compiles under any policy with more updates.
class MockGenerator : public Generator {
 public:
  explicit MockGenerator(MockCoderConfig cfg) : cfg_(cfg) {}
  std::vector<CodeSample> generate(const GenerationRequest& request, const PolicyRef& policy) override;

 private:
  MockCoderConfig cfg_;
};

// Judge endpoint stand-in: answers the batch prompt by reading each
// implementation's semantic marker. With probability `malformed_rate` a reply
// is deliberately malformed to exercise the retry path.
class OracleJudgeTransport : public ChatTransport {
 public:
  explicit OracleJudgeTransport(double malformed_rate = 0.0, std::uint64_t seed = 0)
      : malformed_rate_(malformed_rate), seed_(seed) {}
  ChatResponse complete(const ChatRequest& request) override;

 private:
  double malformed_rate_;
  std::uint64_t seed_;
  std::mutex mu_;
  std::map<std::uint64_t, std::uint64_t> seen_;
};

}  // namespace stpref::llm
