#pragma once

#include <string_view>

#include "transcert/expr/ast.hpp"

namespace transcert::expr {

/// Parses a claim or expression.
///
/// Grammar (see docs/grammar.md):
///   claim    = sum [ relation sum ]
///   relation = "<" | ">" | "~=" [ "[" number "]" ]
///   sum      = product { ("+" | "-") product }
///   product  = unary { ("*" | "/") unary }
///   unary    = "-" unary | power
///   power    = primary [ "^" unary ]
///   primary  = number | constant | function "(" sum ")" | "(" sum ")"
///
/// Throws SyntaxError (with byte offset) or UnknownIdentifier.
Expr parse(std::string_view source);

}  // namespace transcert::expr
