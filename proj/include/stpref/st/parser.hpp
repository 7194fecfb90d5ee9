#pragma once

#include <span>

#include "stpref/st/ast.hpp"
#include "stpref/st/token.hpp"

namespace stpref::st {

struct ParseResult {
  SourceUnit unit;
  Diagnostics diagnostics;
};

// Recursive-descent parser with statement-level recovery. Never stops before
// the end of the token stream; every syntax error becomes one E-PARSE
// diagnostic. The unit is only structurally valid when no errors are reported.
ParseResult parse(std::span<const Token> tokens);

// Convenience: tokenize + parse, lexical diagnostics first.
ParseResult parse_source(std::string_view source);

}  // namespace stpref::st
