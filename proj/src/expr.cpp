#include "secantq/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

namespace secantq {

using ast::BinOp;
using ast::Var;

// ---------------------------------------------------------------------------
// Lexer

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::size_t scan_number(std::string_view src, std::size_t i) {
  const std::size_t start = i;
  while (i < src.size() && is_digit(src[i])) ++i;
  if (i < src.size() && src[i] == '.') {
    ++i;
    while (i < src.size() && is_digit(src[i])) ++i;
  }
  if (i - start == 1 && src[start] == '.') throw SyntaxError(start, "malformed number '.'");
  if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
    if (j < src.size() && is_digit(src[j])) {
      while (j < src.size() && is_digit(src[j])) ++j;
      i = j;
    }
  }
  return i;
}

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_digit(c) || c == '.') {
      const std::size_t end = scan_number(src, i);
      out.push_back({TokenKind::number, std::string(src.substr(i, end - i)), i});
      i = end;
      continue;
    }
    if (is_alpha(c)) {
      std::size_t end = i;
      while (end < src.size() && (is_alpha(src[end]) || is_digit(src[end]))) ++end;
      out.push_back({TokenKind::ident, std::string(src.substr(i, end - i)), i});
      i = end;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '/': kind = TokenKind::slash; break;
      case '^': kind = TokenKind::caret; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      default: throw SyntaxError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tree

namespace {

std::size_t node_depth(const ast::Node& n) {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ast::Neg>) return 1 + v.operand->depth();
        else if constexpr (std::is_same_v<T, ast::Binary>) return 1 + std::max(v.lhs->depth(), v.rhs->depth());
        else if constexpr (std::is_same_v<T, ast::Pow>) return 1 + v.base->depth();
        else return 1;
      },
      n);
}

}  // namespace

Expr Expr::constant(double v) { return Expr(ast::Const{v}); }
Expr Expr::var(Var v) { return Expr(ast::Variable{v}); }
Expr Expr::neg(Expr operand) { return Expr(ast::Neg{std::make_shared<const Expr>(std::move(operand))}); }
Expr Expr::binary(BinOp op, Expr lhs, Expr rhs) {
  return Expr(ast::Binary{op, std::make_shared<const Expr>(std::move(lhs)), std::make_shared<const Expr>(std::move(rhs))});
}
Expr Expr::pow(Expr base, std::uint32_t exponent) {
  return Expr(ast::Pow{std::make_shared<const Expr>(std::move(base)), exponent});
}

std::size_t Expr::depth() const { return node_depth(node_); }

bool Expr::uses(Var v) const {
  return std::visit(
      [v](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Variable>) return n.var == v;
        else if constexpr (std::is_same_v<T, ast::Neg>) return n.operand->uses(v);
        else if constexpr (std::is_same_v<T, ast::Binary>) return n.lhs->uses(v) || n.rhs->uses(v);
        else if constexpr (std::is_same_v<T, ast::Pow>) return n.base->uses(v);
        else return false;
      },
      node_);
}

bool operator==(const Expr& l, const Expr& r) {
  if (l.node_.index() != r.node_.index()) return false;
  return std::visit(
      [&r](const auto& a) -> bool {
        using T = std::decay_t<decltype(a)>;
        const auto& b = std::get<T>(r.node_);
        if constexpr (std::is_same_v<T, ast::Const>) return a.value == b.value;
        else if constexpr (std::is_same_v<T, ast::Variable>) return a.var == b.var;
        else if constexpr (std::is_same_v<T, ast::Neg>) return *a.operand == *b.operand;
        else if constexpr (std::is_same_v<T, ast::Binary>) return a.op == b.op && *a.lhs == *b.lhs && *a.rhs == *b.rhs;
        else return a.exponent == b.exponent && *a.base == *b.base;
      },
      l.node_);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view src) : src_(src), tokens_(tokenize(src)) {}

  Expr run() {
    if (tokens_.empty()) throw SyntaxError(0, "empty expression");
    Expr e = expr();
    if (!at_end()) {
      const Token& t = peek();
      if (t.kind == TokenKind::rparen) throw SyntaxError(t.pos, "unbalanced ')'");
      throw SyntaxError(t.pos, "unexpected trailing input '" + t.text + "'");
    }
    if (e.depth() > kMaxExprDepth) throw SyntaxError(0, "expression nests too deeply");
    return e;
  }

 private:
  struct DepthGuard {
    DepthGuard(Parser& p, std::size_t pos) : p(p) {
      if (++p.depth_ > kMaxExprDepth) throw SyntaxError(pos, "expression nests too deeply");
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  bool at_end() const { return next_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[next_]; }
  std::size_t here() const { return at_end() ? src_.size() : peek().pos; }
  bool accept(TokenKind k) {
    if (!at_end() && peek().kind == k) {
      ++next_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept(TokenKind::plus)) lhs = Expr::binary(BinOp::add, lhs, term());
      else if (accept(TokenKind::minus)) lhs = Expr::binary(BinOp::sub, lhs, term());
      else return lhs;
      check_depth(lhs);
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept(TokenKind::star)) lhs = Expr::binary(BinOp::mul, lhs, unary());
      else if (accept(TokenKind::slash)) lhs = Expr::binary(BinOp::div, lhs, unary());
      else return lhs;
      check_depth(lhs);
    }
  }

  Expr unary() {
    DepthGuard guard(*this, here());
    if (accept(TokenKind::minus)) return Expr::neg(unary());
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept(TokenKind::caret)) return Expr::pow(base, exponent());
    return base;
  }

  std::uint32_t exponent() {
    const std::size_t pos = here();
    if (at_end()) throw SyntaxError(pos, "missing exponent");
    const Token& t = peek();
    if (t.kind == TokenKind::minus) throw SyntaxError(pos, "negative exponent");
    if (t.kind != TokenKind::number) throw SyntaxError(pos, "exponent must be a non-negative integer literal");
    if (!std::all_of(t.text.begin(), t.text.end(), is_digit))
      throw SyntaxError(pos, "exponent must be a non-negative integer literal");
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) throw SyntaxError(pos, "exponent out of range");
    ++next_;
    if (!accept(TokenKind::caret)) return value;
    const std::uint32_t inner = exponent();
    return checked_pow(value, inner, pos);
  }

  static std::uint32_t checked_pow(std::uint32_t base, std::uint32_t exp, std::size_t pos) {
    if (base <= 1) return exp == 0 ? 1 : base;
    std::uint64_t acc = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
      acc *= base;
      if (acc > std::numeric_limits<std::uint32_t>::max()) throw SyntaxError(pos, "exponent out of range");
    }
    return static_cast<std::uint32_t>(acc);
  }

  Expr primary() {
    const std::size_t pos = here();
    if (at_end()) throw SyntaxError(pos, "unexpected end of input");
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::number: {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size() || !std::isfinite(v))
          throw SyntaxError(pos, "invalid number '" + t.text + "'");
        ++next_;
        return Expr::constant(v);
      }
      case TokenKind::ident:
        ++next_;
        if (t.text == "x") return Expr::var(Var::x);
        if (t.text == "y") return Expr::var(Var::y);
        throw SyntaxError(pos, "unknown identifier '" + t.text + "'");
      case TokenKind::lparen: {
        DepthGuard guard(*this, pos);
        ++next_;
        Expr inner = expr();
        if (!accept(TokenKind::rparen)) throw SyntaxError(here(), "unbalanced '(' opened at offset " + std::to_string(pos));
        return inner;
      }
      case TokenKind::rparen:
        throw SyntaxError(pos, "unbalanced ')'");
      default:
        throw SyntaxError(pos, "unexpected '" + t.text + "'");
    }
  }

  void check_depth(const Expr& e) const {
    if (e.depth() > kMaxExprDepth) throw SyntaxError(here(), "expression nests too deeply");
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t next_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace

Expr parse(std::string_view src) { return Parser(src).run(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

int precedence(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Binary>) return (n.op == BinOp::add || n.op == BinOp::sub) ? 1 : 2;
        else if constexpr (std::is_same_v<T, ast::Neg>) return 3;
        else if constexpr (std::is_same_v<T, ast::Pow>) return 4;
        else return 5;
      },
      e.node());
}

std::string format_const(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void print(const Expr& e, std::string& out);

void print_child(const Expr& e, bool parens, std::string& out) {
  if (parens) out += '(';
  print(e, out);
  if (parens) out += ')';
}

void print(const Expr& e, std::string& out) {
  std::visit(
      [&out](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Const>) {
          out += format_const(n.value);
        } else if constexpr (std::is_same_v<T, ast::Variable>) {
          out += n.var == Var::x ? 'x' : 'y';
        } else if constexpr (std::is_same_v<T, ast::Neg>) {
          out += '-';
          print_child(*n.operand, precedence(*n.operand) < 3, out);
        } else if constexpr (std::is_same_v<T, ast::Binary>) {
          const int level = (n.op == BinOp::add || n.op == BinOp::sub) ? 1 : 2;
          static constexpr const char* ops[] = {" + ", " - ", "*", "/"};
          print_child(*n.lhs, precedence(*n.lhs) < level, out);
          out += ops[static_cast<int>(n.op)];
          print_child(*n.rhs, precedence(*n.rhs) <= level, out);
        } else {
          print_child(*n.base, precedence(*n.base) < 5, out);
          out += '^';
          out += std::to_string(n.exponent);
        }
      },
      e.node());
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double finite_or_throw(double v) {
  if (!std::isfinite(v)) throw EvalError("non-finite intermediate value");
  return v;
}

double int_pow(double base, std::uint32_t exp) {
  double result = 1.0;
  while (exp != 0) {
    if (exp & 1u) result = finite_or_throw(result * base);
    exp >>= 1;
    if (exp != 0) base = finite_or_throw(base * base);
  }
  return result;
}

}  // namespace

double eval2(const Expr& e, double x, double y) {
  return std::visit(
      [x, y](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Const>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, ast::Variable>) {
          return finite_or_throw(n.var == Var::x ? x : y);
        } else if constexpr (std::is_same_v<T, ast::Neg>) {
          return -eval2(*n.operand, x, y);
        } else if constexpr (std::is_same_v<T, ast::Binary>) {
          const double l = eval2(*n.lhs, x, y);
          const double r = eval2(*n.rhs, x, y);
          switch (n.op) {
            case BinOp::add: return finite_or_throw(l + r);
            case BinOp::sub: return finite_or_throw(l - r);
            case BinOp::mul: return finite_or_throw(l * r);
            case BinOp::div:
              if (r == 0.0) throw EvalError("division by zero");
              return finite_or_throw(l / r);
          }
          return 0.0;
        } else {
          return int_pow(eval2(*n.base, x, y), n.exponent);
        }
      },
      e.node());
}

namespace {

double central_step(double coord) {
  static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
  return h0 * std::fmax(1.0, std::fabs(coord));
}

template <class F>
double central_difference(F&& f, double at) {
  const double h = central_step(at);
  const double hi = at + h;
  const double lo = at - h;
  return (f(hi) - f(lo)) / (hi - lo);
}

}  // namespace

Vector2 grad_fd(const Expr& e, Vector2 p) {
  const double gx = central_difference([&](double t) { return eval2(e, t, p.y()); }, p.x());
  const double gy = central_difference([&](double t) { return eval2(e, p.x(), t); }, p.y());
  return {gx, gy};
}

double deriv_fd(const Expr& e, double x) {
  return central_difference([&](double t) { return eval2(e, t, 0.0); }, x);
}

}  // namespace secantq
