#include "transcert/expr/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "transcert/errors.hpp"

namespace transcert::expr {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Less, Greater, Approx, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    const std::size_t start = i;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_digit(c)) {
      while (i < src.size() && is_digit(src[i])) ++i;
      if (i < src.size() && src[i] == '.') {
        ++i;
        while (i < src.size() && is_digit(src[i])) ++i;
      }
      // An exponent needs at least one digit; otherwise the 'e' is the constant.
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
        if (j < src.size() && is_digit(src[j])) {
          i = j;
          while (i < src.size() && is_digit(src[i])) ++i;
        }
      }
      tokens.push_back({Tok::Number, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (is_alpha(c)) {
      while (i < src.size() && (is_alpha(src[i]) || is_digit(src[i]))) ++i;
      tokens.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+':
        kind = Tok::Plus;
        break;
      case '-':
        kind = Tok::Minus;
        break;
      case '*':
        kind = Tok::Star;
        break;
      case '/':
        kind = Tok::Slash;
        break;
      case '^':
        kind = Tok::Caret;
        break;
      case '(':
        kind = Tok::LParen;
        break;
      case ')':
        kind = Tok::RParen;
        break;
      case '[':
        kind = Tok::LBracket;
        break;
      case ']':
        kind = Tok::RBracket;
        break;
      case '<':
        kind = Tok::Less;
        break;
      case '>':
        kind = Tok::Greater;
        break;
      case '~':
        if (i + 1 < src.size() && src[i + 1] == '=') {
          tokens.push_back({Tok::Approx, "~=", start});
          i += 2;
          continue;
        }
        throw SyntaxError("expected '~='", start);
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
    tokens.push_back({kind, std::string(1, c), start});
    ++i;
  }
  tokens.push_back({Tok::End, "", src.size()});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  Expr parse_claim() {
    ExprPtr lhs = parse_sum();
    const Token& t = peek();
    if (t.kind == Tok::Less || t.kind == Tok::Greater || t.kind == Tok::Approx) {
      advance();
      const CompareOp op = t.kind == Tok::Less ? CompareOp::Less
                           : t.kind == Tok::Greater ? CompareOp::Greater
                                                    : CompareOp::Approx;
      std::optional<std::string> tolerance;
      if (op == CompareOp::Approx && peek().kind == Tok::LBracket) {
        advance();
        tolerance = expect(Tok::Number, "a tolerance literal").text;
        expect(Tok::RBracket, "']'");
      }
      ExprPtr rhs = parse_sum();
      lhs = make(Comparison{op, lhs, rhs, tolerance}, t.offset);
    }
    if (peek().kind != Tok::End) {
      if (peek().kind == Tok::Less || peek().kind == Tok::Greater || peek().kind == Tok::Approx)
        throw SyntaxError("chained comparisons are not allowed", peek().offset);
      throw SyntaxError("unexpected '" + peek().text + "'", peek().offset);
    }
    return *lhs;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      const std::string found = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
      throw SyntaxError(std::string("expected ") + what + ", found " + found, peek().offset);
    }
    return advance();
  }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_product();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& t = advance();
      ExprPtr rhs = parse_product();
      lhs = make(Binary{t.kind == Tok::Plus ? BinaryOp::Add : BinaryOp::Sub, lhs, rhs}, t.offset);
    }
    return lhs;
  }

  ExprPtr parse_product() {
    ExprPtr lhs = parse_unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& t = advance();
      ExprPtr rhs = parse_unary();
      lhs = make(Binary{t.kind == Tok::Star ? BinaryOp::Mul : BinaryOp::Div, lhs, rhs}, t.offset);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (peek().kind == Tok::Minus) {
      const Token& t = advance();
      return make(Negate{parse_unary()}, t.offset);
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    if (peek().kind == Tok::Caret) {
      const Token& t = advance();
      return make(Binary{BinaryOp::Pow, base, parse_unary()}, t.offset);
    }
    return base;
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        advance();
        return make(NumberLiteral{t.text}, t.offset);
      case Tok::LParen: {
        advance();
        ExprPtr inner = parse_sum();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident: {
        advance();
        if (auto c = constant_named(t.text)) return make(ConstantRef{*c}, t.offset);
        if (auto f = function_named(t.text)) {
          expect(Tok::LParen, "'(' after function name");
          ExprPtr arg = parse_sum();
          expect(Tok::RParen, "')'");
          return make(Call{*f, arg}, t.offset);
        }
        throw UnknownIdentifier(t.text, t.offset);
      }
      case Tok::End:
        throw SyntaxError("unexpected end of input", t.offset);
      default:
        throw SyntaxError("unexpected '" + t.text + "'", t.offset);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view source) { return Parser(source).parse_claim(); }

}  // namespace transcert::expr
