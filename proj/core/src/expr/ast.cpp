#include "transcert/expr/ast.hpp"

#include <array>
#include <utility>

namespace transcert::expr {

namespace {

constexpr std::array<std::pair<const char*, Constant>, 3> kConstants{{
    {"pi", Constant::Pi},
    {"e", Constant::E},
    {"i", Constant::I},
}};

constexpr std::array<std::pair<const char*, Function>, 9> kFunctions{{
    {"exp", Function::Exp},
    {"ln", Function::Ln},
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"sqrt", Function::Sqrt},
    {"abs", Function::Abs},
    {"re", Function::Re},
    {"im", Function::Im},
    {"conj", Function::Conj},
}};

// Binding strength of the production a node is printed by.
enum Level { kRelation = 0, kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kPrimary = 5 };

int level_of(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Negate>) {
          return kUnary;
        } else if constexpr (std::is_same_v<T, Binary>) {
          switch (n.op) {
            case BinaryOp::Add:
            case BinaryOp::Sub:
              return kSum;
            case BinaryOp::Mul:
            case BinaryOp::Div:
              return kProduct;
            case BinaryOp::Pow:
              return kPower;
          }
          return kPower;
        } else if constexpr (std::is_same_v<T, Comparison>) {
          return kRelation;
        } else {
          return kPrimary;
        }
      },
      e.node);
}

void print(const Expr& e, std::string& out);

void print_at(const Expr& e, int required, std::string& out) {
  if (level_of(e) < required) {
    out += '(';
    print(e, out);
    out += ')';
  } else {
    print(e, out);
  }
}

void print(const Expr& e, std::string& out) {
  std::visit(
      [&out](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberLiteral>) {
          out += n.text;
        } else if constexpr (std::is_same_v<T, ConstantRef>) {
          out += name_of(n.constant);
        } else if constexpr (std::is_same_v<T, Negate>) {
          out += '-';
          print_at(*n.operand, kUnary, out);
        } else if constexpr (std::is_same_v<T, Binary>) {
          switch (n.op) {
            case BinaryOp::Add:
            case BinaryOp::Sub:
              print_at(*n.lhs, kSum, out);
              out += n.op == BinaryOp::Add ? " + " : " - ";
              print_at(*n.rhs, kProduct, out);
              break;
            case BinaryOp::Mul:
            case BinaryOp::Div:
              print_at(*n.lhs, kProduct, out);
              out += n.op == BinaryOp::Mul ? "*" : "/";
              print_at(*n.rhs, kUnary, out);
              break;
            case BinaryOp::Pow:
              print_at(*n.lhs, kPrimary, out);
              out += '^';
              print_at(*n.rhs, kUnary, out);
              break;
          }
        } else if constexpr (std::is_same_v<T, Call>) {
          out += name_of(n.function);
          out += '(';
          print(*n.argument, out);
          out += ')';
        } else {
          print_at(*n.lhs, kSum, out);
          out += ' ';
          out += symbol_of(n.op);
          if (n.tolerance) out += "[" + *n.tolerance + "]";
          out += ' ';
          print_at(*n.rhs, kSum, out);
        }
      },
      e.node);
}

bool same(const ExprPtr& a, const ExprPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace

ExprPtr make(Node node, std::size_t offset) { return std::make_shared<const Expr>(Expr{std::move(node), offset}); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, NumberLiteral>) {
          return x.text == y.text;
        } else if constexpr (std::is_same_v<T, ConstantRef>) {
          return x.constant == y.constant;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return same(x.operand, y.operand);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return x.op == y.op && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
        } else if constexpr (std::is_same_v<T, Call>) {
          return x.function == y.function && same(x.argument, y.argument);
        } else {
          return x.op == y.op && x.tolerance == y.tolerance && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
        }
      },
      a.node);
}

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

const char* name_of(Constant c) {
  for (const auto& [name, value] : kConstants)
    if (value == c) return name;
  return "?";
}

const char* name_of(Function f) {
  for (const auto& [name, value] : kFunctions)
    if (value == f) return name;
  return "?";
}

const char* symbol_of(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add:
      return "+";
    case BinaryOp::Sub:
      return "-";
    case BinaryOp::Mul:
      return "*";
    case BinaryOp::Div:
      return "/";
    case BinaryOp::Pow:
      break;
  }
  return "^";
}

const char* symbol_of(CompareOp op) {
  switch (op) {
    case CompareOp::Less:
      return "<";
    case CompareOp::Greater:
      return ">";
    case CompareOp::Approx:
      break;
  }
  return "~=";
}

std::optional<Constant> constant_named(std::string_view name) {
  for (const auto& [n, value] : kConstants)
    if (name == n) return value;
  return std::nullopt;
}

std::optional<Function> function_named(std::string_view name) {
  for (const auto& [n, value] : kFunctions)
    if (name == n) return value;
  return std::nullopt;
}

}  // namespace transcert::expr
