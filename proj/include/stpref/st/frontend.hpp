#pragma once

#include <string_view>

#include "stpref/st/ast.hpp"
#include "stpref/st/diagnostic.hpp"
#include "stpref/st/parser.hpp"
#include "stpref/st/printer.hpp"
#include "stpref/st/token.hpp"
#include "stpref/st/typecheck.hpp"

namespace stpref::st {

struct CheckResult {
  bool success = false;
  Diagnostics diagnostics;
};

// Full front-end pass: tokenize, parse, and (when parsing succeeded) type
// check. success is true iff no error-severity diagnostic was produced.
// Pure and reentrant.
CheckResult check(std::string_view source);

}  // namespace stpref::st
