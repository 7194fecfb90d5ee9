#pragma once

#include "stpref/st/ast.hpp"

namespace stpref::st {

// Static semantics for the supported subset. Returns every diagnostic found;
// an empty list (or warnings only) means the unit is well-typed.
//
// Rules: names are declared before use (POUs may appear in any order);
// assignments need an identical type or an implicit widening (see
// widens_to); IF/WHILE/REPEAT conditions are BOOL; CASE selectors and labels
// are integers and labels are disjoint; FOR control variables and bounds are
// integers of one signedness class; calls match arity and parameter types;
// array subscripts are integers and match the dimension count; integer
// constants are range-checked against their target type.
Diagnostics typecheck(const SourceUnit& unit);

// Interface of a standard function block known to the checker (TON, CTU, ...).
bool is_standard_function_block(std::string_view upper_name);

}  // namespace stpref::st
