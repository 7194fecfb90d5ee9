#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stpref/llm/chat.hpp"
#include "stpref/records.hpp"

namespace stpref::llm {

// The policy a sample is drawn from. `dpo_updates` counts the preference
// updates applied on top of the SFT model.
struct PolicyRef {
  std::string path;
  int dpo_updates = 0;
};

struct GenerationRequest {
  Intent intent;
  int n_samples = 1;
  Decoding decoding;
  int iteration = 0;
  // model name sent to the endpoint; "{policy}" expands to the policy path
  std::string model;
};

class Generator {
 public:
  virtual ~Generator() = default;
  // Returns exactly n_samples samples or throws GenerationError.
  virtual std::vector<CodeSample> generate(const GenerationRequest& request, const PolicyRef& policy) = 0;
};

// "<intent>/i<iteration>/s<k>", unique within a run.
std::string sample_id(const std::string& intent_id, int iteration, int k);

// Body of the first fenced code block, or the whole reply when there is none.
std::string extract_code(std::string_view reply);

std::string default_generation_prompt();

class ChatGenerator : public Generator {
 public:
  explicit ChatGenerator(ChatTransport& transport, std::string system_prompt = default_generation_prompt());
  std::vector<CodeSample> generate(const GenerationRequest& request, const PolicyRef& policy) override;

 private:
  ChatTransport& transport_;
  std::string system_prompt_;
};

}  // namespace stpref::llm
