#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace transcert::expr {

enum class Constant { Pi, E, I };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Function { Exp, Ln, Sin, Cos, Sqrt, Abs, Re, Im, Conj };
enum class CompareOp { Less, Greater, Approx };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Decimal literal kept verbatim; converted outward at evaluation time.
struct NumberLiteral {
  std::string text;
};

struct ConstantRef {
  Constant constant;
};

struct Negate {
  ExprPtr operand;
};

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Call {
  Function function;
  ExprPtr argument;
};

/// Top-level relation. `tolerance` is the optional literal of `~=[eps]`.
struct Comparison {
  CompareOp op;
  ExprPtr lhs;
  ExprPtr rhs;
  std::optional<std::string> tolerance;
};

using Node = std::variant<NumberLiteral, ConstantRef, Negate, Binary, Call, Comparison>;

/// Immutable expression tree node. `offset` is the byte offset in the source.
struct Expr {
  Node node;
  std::size_t offset = 0;
};

ExprPtr make(Node node, std::size_t offset = 0);

/// Structural equality; source offsets are ignored.
bool operator==(const Expr& a, const Expr& b);

/// Minimal-parenthesis rendering that parses back to an identical tree.
std::string to_string(const Expr& e);

const char* name_of(Constant c);
const char* name_of(Function f);
const char* symbol_of(BinaryOp op);
const char* symbol_of(CompareOp op);
std::optional<Constant> constant_named(std::string_view name);
std::optional<Function> function_named(std::string_view name);

}  // namespace transcert::expr
