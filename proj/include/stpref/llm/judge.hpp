#pragma once

#include <atomic>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stpref/llm/chat.hpp"
#include "stpref/records.hpp"

namespace stpref::llm {

inline constexpr std::string_view kImplementationSeparator = "====================";

struct JudgePrompt {
  std::string system;
  std::string user;
};

// The batch-judging prompt: fixed system instructions and a user turn listing
// the problem and the separator-delimited implementations.
JudgePrompt build_judge_prompt(const Intent& intent, std::span<const std::string> implementations);

// Reads "[0] [1] ..." replies. Whitespace and surrounding prose are tolerated;
// a bracketed token other than 0/1 or a count different from `expected`
// throws FormatError.
std::vector<SemanticLabel> parse_judge_reply(std::string_view reply, std::size_t expected);

// The semantic expert E_L.
class Judge {
 public:
  virtual ~Judge() = default;
  // One label per implementation, in order. Throws JudgeUnavailable when no
  // well-formed verdict could be obtained.
  virtual std::vector<SemanticLabel> judge(const Intent& intent, std::span<const std::string> implementations) = 0;
};

struct ChatJudgeOptions {
  std::string model;
  int max_format_retries = 2;
  // implementations per prompt; 0 sends them all in one prompt
  std::size_t batch_cap = 0;
  double temperature = 0.0;
  int max_tokens = 256;
};

class ChatJudge : public Judge {
 public:
  ChatJudge(ChatTransport& transport, ChatJudgeOptions options);
  std::vector<SemanticLabel> judge(const Intent& intent, std::span<const std::string> implementations) override;

  // total endpoint calls made, for diagnostics and tests
  std::size_t calls() const { return calls_.load(); }

 private:
  std::vector<SemanticLabel> judge_batch(const Intent& intent, std::span<const std::string> implementations);

  ChatTransport& transport_;
  ChatJudgeOptions opts_;
  std::atomic<std::size_t> calls_{0};
};

}  // namespace stpref::llm
