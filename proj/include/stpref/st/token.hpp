#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stpref/st/diagnostic.hpp"

namespace stpref::st {

enum class TokenKind {
  identifier,
  keyword,
  int_literal,
  real_literal,
  string_literal,
  time_literal,
  // typed literal such as INT#5 or REAL#1.5; `type_prefix` carries the type
  typed_int_literal,
  typed_real_literal,
  bool_literal,
  // punctuation / operators
  assign,       // :=
  output_arrow, // =>
  semicolon,
  colon,
  comma,
  dot,
  range,        // ..
  lparen,
  rparen,
  lbracket,
  rbracket,
  plus,
  minus,
  star,
  slash,
  power,        // **
  eq,
  ne,
  lt,
  le,
  gt,
  ge,
  ampersand,
  end_of_input,
};

const char* to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::end_of_input;
  // Verbatim source text. For keywords `upper` holds the canonical spelling.
  std::string text;
  std::string upper;
  Span span;

  std::uint64_t int_value = 0;
  double real_value = 0.0;
  bool bool_value = false;
  std::int64_t time_ns = 0;
  std::string string_value;
  std::string type_prefix;

  bool is_keyword(std::string_view kw) const { return kind == TokenKind::keyword && upper == kw; }
};

struct LexResult {
  std::vector<Token> tokens;
  Diagnostics diagnostics;
};

// Keywords are matched case-insensitively. Comments `(* *)` and `//` are
// skipped. The returned token list has no end-of-input sentinel.
LexResult tokenize(std::string_view source);

bool is_reserved_keyword(std::string_view upper);

}  // namespace stpref::st
