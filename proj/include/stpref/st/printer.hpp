#pragma once

#include <string>

#include "stpref/st/ast.hpp"

namespace stpref::st {

// Canonical ST text: upper-case keywords, four-space indentation, minimal
// parentheses. Reparsing the output yields a structurally equal AST.
std::string pretty_print(const SourceUnit& unit);
std::string pretty_print(const Expr& expr);

}  // namespace stpref::st
