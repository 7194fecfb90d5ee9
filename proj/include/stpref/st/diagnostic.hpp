#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stpref::st {

// 1-based line and column, counted in code points. Length is in code points.
struct Span {
  std::uint32_t line = 1;
  std::uint32_t column = 1;
  std::uint32_t length = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

enum class Severity { error, warning };

const char* to_string(Severity s);

// Stable diagnostic codes. Tests and the JSONL schema refer to these strings.
namespace codes {
inline constexpr const char* lex = "E-LEX";
inline constexpr const char* parse = "E-PARSE";
inline constexpr const char* undeclared = "E-UNDECL";
inline constexpr const char* duplicate = "E-DUP";
inline constexpr const char* type_assign = "E-TYPE-ASSIGN";
inline constexpr const char* type_op = "E-TYPE-OP";
inline constexpr const char* type_arg = "E-TYPE-ARG";
inline constexpr const char* type_for = "E-TYPE-FOR";
inline constexpr const char* cond_bool = "E-COND-BOOL";
inline constexpr const char* case_label = "E-CASE";
inline constexpr const char* arity = "E-ARITY";
inline constexpr const char* call = "E-CALL";
inline constexpr const char* index = "E-INDEX";
inline constexpr const char* member = "E-MEMBER";
inline constexpr const char* constant = "E-CONST";
inline constexpr const char* range = "E-RANGE";
inline constexpr const char* exit_outside_loop = "E-EXIT";
inline constexpr const char* ext_backend = "E-EXT-BACKEND";
// the external compiler exited nonzero; the message carries its output
inline constexpr const char* ext_rejected = "E-EXT";
inline constexpr const char* no_result = "W-NO-RESULT";
}  // namespace codes

struct Diagnostic {
  Severity severity = Severity::error;
  Span span;
  std::string code;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline bool has_errors(const Diagnostics& diags) {
  for (const auto& d : diags) {
    if (d.severity == Severity::error) return true;
  }
  return false;
}

// "3:14: error E-UNDECL: ..." style line used by the CLI.
std::string format(const Diagnostic& d);

}  // namespace stpref::st
