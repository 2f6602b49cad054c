#pragma once

// Arithmetic expressions in x and y, used as the sampled function f.
//
// Grammar (whitespace ignored):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   exponent:= INTEGER ('^' exponent)?       folded right to left
//   primary := NUMBER | 'x' | 'y' | '(' expr ')'
//
// So ^ binds tighter than unary minus (-x^2 is -(x^2)) and exponents are
// non-negative integer literals. New functions (sin, exp, ...) would slot in
// as an extra primary alternative and an extra node kind.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "secantq/ga2.hpp"

namespace secantq {

enum class TokenKind { number, ident, plus, minus, star, slash, caret, lparen, rparen };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos = 0;
};

/// Splits src into tokens. Throws SyntaxError on characters outside the grammar.
std::vector<Token> tokenize(std::string_view src);

inline constexpr std::size_t kMaxExprDepth = 512;

class Expr;

namespace ast {
enum class Var { x, y };
enum class BinOp { add, sub, mul, div };

struct Const {
  double value;
};
struct Variable {
  Var var;
};
struct Neg {
  std::shared_ptr<const Expr> operand;
};
struct Binary {
  BinOp op;
  std::shared_ptr<const Expr> lhs;
  std::shared_ptr<const Expr> rhs;
};
struct Pow {
  std::shared_ptr<const Expr> base;
  std::uint32_t exponent;
};

using Node = std::variant<Const, Variable, Neg, Binary, Pow>;
}  // namespace ast

/// Immutable expression tree; copies share structure.
class Expr {
 public:
  explicit Expr(ast::Node node) : node_(std::move(node)) {}

  static Expr constant(double v);
  static Expr var(ast::Var v);
  static Expr neg(Expr operand);
  static Expr binary(ast::BinOp op, Expr lhs, Expr rhs);
  static Expr pow(Expr base, std::uint32_t exponent);

  const ast::Node& node() const noexcept { return node_; }

  std::size_t depth() const;
  bool uses(ast::Var v) const;

  friend bool operator==(const Expr& l, const Expr& r);

 private:
  ast::Node node_;
};

Expr parse(std::string_view src);

/// Minimal-parenthesis rendering; parse(to_string(e)) == e.
std::string to_string(const Expr& e);

/// Throws EvalError on division by zero or a non-finite intermediate.
double eval2(const Expr& e, double x, double y);

/// Central-difference gradient, step cbrt(eps) * max(1, |coordinate|) per axis.
Vector2 grad_fd(const Expr& e, Vector2 p);

/// One-variable central difference of e(x, 0).
double deriv_fd(const Expr& e, double x);

}  // namespace secantq
