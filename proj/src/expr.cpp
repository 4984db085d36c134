#include "g2g/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "g2g/quadrature.hpp"  // EvalError

namespace g2g {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kE = 2.718281828459045235360287471352662498;
}  // namespace

struct Expr::Node {
  enum class Kind { constant, variable, unary, binary };
  Kind kind;
  double value = 0.0;
  char var = 0;
  UnaryOp un{};
  BinaryOp bin{};
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Expr::Node;
using UnaryOp = Expr::UnaryOp;
using BinaryOp = Expr::BinaryOp;

struct Env {
  // Bound flags and values, indexed by the four variable letters.
  bool has_u = false, has_r = false, has_x = false, has_y = false;
  double u = 0, r = 0, x = 0, y = 0;
};

double eval_node(const Node& n, const Env& env) {
  switch (n.kind) {
    case Node::Kind::constant:
      return n.value;
    case Node::Kind::variable:
      switch (n.var) {
        case 'u':
          if (!env.has_u) throw EvalError("variable 'u' is not bound");
          return env.u;
        case 'r':
          if (!env.has_r) throw EvalError("variable 'r' is not bound");
          return env.r;
        case 'x':
          if (!env.has_x) throw EvalError("variable 'x' is not bound");
          return env.x;
        case 'y':
          if (!env.has_y) throw EvalError("variable 'y' is not bound");
          return env.y;
      }
      throw EvalError("unknown variable");
    case Node::Kind::unary: {
      const double v = eval_node(*n.lhs, env);
      switch (n.un) {
        case UnaryOp::neg: return -v;
        case UnaryOp::exp: return std::exp(v);
        case UnaryOp::log:
          if (!(v > 0.0)) throw EvalError("log of a non-positive value");
          return std::log(v);
        case UnaryOp::sqrt:
          if (v < 0.0) throw EvalError("sqrt of a negative value");
          return std::sqrt(v);
        case UnaryOp::sin: return std::sin(v);
        case UnaryOp::cos: return std::cos(v);
        case UnaryOp::arctan: return std::atan(v);
      }
      throw EvalError("unknown unary operator");
    }
    case Node::Kind::binary: {
      const double a = eval_node(*n.lhs, env);
      const double b = eval_node(*n.rhs, env);
      switch (n.bin) {
        case BinaryOp::add: return a + b;
        case BinaryOp::sub: return a - b;
        case BinaryOp::mul: return a * b;
        case BinaryOp::div:
          if (b == 0.0) throw EvalError("division by zero");
          return a / b;
        case BinaryOp::pow: {
          if (a == 0.0 && b < 0.0)
            throw EvalError("zero raised to a negative power");
          const double p = std::pow(a, b);
          if (!std::isfinite(p))
            throw EvalError("pow produced a non-finite value");
          return p;
        }
      }
      throw EvalError("unknown binary operator");
    }
  }
  throw EvalError("malformed expression node");
}

void collect_vars(const Node& n, bool used[4]) {
  switch (n.kind) {
    case Node::Kind::variable:
      switch (n.var) {
        case 'u': used[0] = true; break;
        case 'r': used[1] = true; break;
        case 'x': used[2] = true; break;
        case 'y': used[3] = true; break;
      }
      return;
    case Node::Kind::unary:
      collect_vars(*n.lhs, used);
      return;
    case Node::Kind::binary:
      collect_vars(*n.lhs, used);
      collect_vars(*n.rhs, used);
      return;
    default:
      return;
  }
}

// Recursive-descent parser per the grammar in the header. Builds through
// the public Expr factories.
class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Expr run() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", 0);
    Expr e = parse_expr();
    skip_ws();
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      Expr rhs = parse_term();
      lhs = Expr::binary(c == '+' ? BinaryOp::add : BinaryOp::sub,
                         std::move(lhs), std::move(rhs));
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      Expr rhs = parse_unary();
      lhs = Expr::binary(c == '*' ? BinaryOp::mul : BinaryOp::div,
                         std::move(lhs), std::move(rhs));
    }
  }

  Expr parse_unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return Expr::unary(UnaryOp::neg, parse_unary());
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    Expr exponent = parse_unary();  // right-assoc; exponent may be signed
    return Expr::binary(BinaryOp::pow, std::move(base), std::move(exponent));
  }

  Expr parse_primary() {
    skip_ws();
    if (at_end()) throw ParseError("expected an operand", pos_);
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr e = parse_expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return parse_number();
    if (c >= 'a' && c <= 'z') return parse_identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    while (!at_end() &&
           (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.'))
      ++pos_;
    // Optional exponent: e or E followed by optional sign and digits.
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
          ++pos_;
      }
    }
    const std::string tok = text_.substr(start, pos_ - start);
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size())
      throw ParseError("malformed number '" + tok + "'", start);
    return Expr::constant(v);
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (!at_end() && peek() >= 'a' && peek() <= 'z') ++pos_;
    const std::string name = text_.substr(start, pos_ - start);

    if (name == "pi") return Expr::constant(kPi);
    if (name == "e") return Expr::constant(kE);

    static const struct {
      const char* name;
      UnaryOp op;
    } kFunctions[] = {{"exp", UnaryOp::exp},   {"log", UnaryOp::log},
                      {"sqrt", UnaryOp::sqrt}, {"sin", UnaryOp::sin},
                      {"cos", UnaryOp::cos},   {"arctan", UnaryOp::arctan}};
    for (const auto& f : kFunctions) {
      if (name == f.name) {
        skip_ws();
        if (peek() != '(')
          throw ParseError("expected '(' after function '" + name + "'", pos_);
        ++pos_;
        Expr arg = parse_expr();
        skip_ws();
        if (peek() != ')') throw ParseError("expected ')'", pos_);
        ++pos_;
        return Expr::unary(f.op, std::move(arg));
      }
    }

    if (name.size() == 1 && (name[0] == 'u' || name[0] == 'r' ||
                             name[0] == 'x' || name[0] == 'y'))
      return Expr::variable(name[0]);
    throw ParseError("unknown identifier '" + name + "'", start);
  }
};

const char* unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::neg: return "-";
    case UnaryOp::exp: return "exp";
    case UnaryOp::log: return "log";
    case UnaryOp::sqrt: return "sqrt";
    case UnaryOp::sin: return "sin";
    case UnaryOp::cos: return "cos";
    case UnaryOp::arctan: return "arctan";
  }
  return "?";
}

void print_node(const Node& n, std::ostringstream& out) {
  switch (n.kind) {
    case Node::Kind::constant: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n.value;
      std::string s = tmp.str();
      if (n.value < 0.0) {
        out << '(' << s << ')';
      } else {
        out << s;
      }
      return;
    }
    case Node::Kind::variable:
      out << n.var;
      return;
    case Node::Kind::unary:
      if (n.un == UnaryOp::neg) {
        out << "(-";
        print_node(*n.lhs, out);
        out << ')';
      } else {
        out << unary_name(n.un) << '(';
        print_node(*n.lhs, out);
        out << ')';
      }
      return;
    case Node::Kind::binary: {
      const char* op = nullptr;
      switch (n.bin) {
        case BinaryOp::add: op = "+"; break;
        case BinaryOp::sub: op = "-"; break;
        case BinaryOp::mul: op = "*"; break;
        case BinaryOp::div: op = "/"; break;
        case BinaryOp::pow: op = "^"; break;
      }
      out << '(';
      print_node(*n.lhs, out);
      out << op;
      print_node(*n.rhs, out);
      out << ')';
      return;
    }
  }
}

}  // namespace

Expr::Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
Expr::Expr(const Expr&) = default;
Expr::Expr(Expr&&) noexcept = default;
Expr& Expr::operator=(const Expr&) = default;
Expr& Expr::operator=(Expr&&) noexcept = default;
Expr::~Expr() = default;

Expr Expr::constant(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::constant;
  n->value = v;
  return Expr(std::move(n));
}

Expr Expr::variable(char name) {
  if (name != 'u' && name != 'r' && name != 'x' && name != 'y')
    throw ParseError(std::string("unknown variable '") + name + "'", 0);
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::variable;
  n->var = name;
  return Expr(std::move(n));
}

Expr Expr::unary(UnaryOp op, Expr operand) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::unary;
  n->un = op;
  n->lhs = operand.root_;
  return Expr(std::move(n));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::binary;
  n->bin = op;
  n->lhs = lhs.root_;
  n->rhs = rhs.root_;
  return Expr(std::move(n));
}

bool Expr::uses_variable(char name) const {
  bool used[4] = {false, false, false, false};
  collect_vars(*root_, used);
  switch (name) {
    case 'u': return used[0];
    case 'r': return used[1];
    case 'x': return used[2];
    case 'y': return used[3];
  }
  return false;
}

int Expr::arity() const {
  bool used[4] = {false, false, false, false};
  collect_vars(*root_, used);
  const bool one_var = used[0] || used[1];
  const bool two_var = used[2] || used[3];
  if (one_var && two_var)
    throw ParseError("expression mixes one-variable (u, r) and two-variable "
                     "(x, y) alphabets",
                     0);
  if (used[0] && used[1])
    throw ParseError("expression uses both u and r", 0);
  if (two_var) return 2;
  if (one_var) return 1;
  return 0;
}

double Expr::eval1(double t) const {
  Env env;
  env.has_u = env.has_r = true;
  env.u = env.r = t;
  return eval_node(*root_, env);
}

double Expr::eval2(double y, double x) const {
  Env env;
  env.has_x = env.has_y = true;
  env.x = x;
  env.y = y;
  return eval_node(*root_, env);
}

std::string Expr::print() const {
  std::ostringstream out;
  print_node(*root_, out);
  return out.str();
}

Expr parse(const std::string& text) {
  Parser p(text);
  Expr e = p.run();
  (void)e.arity();  // reject mixed variable alphabets at parse time
  return e;
}

}  // namespace g2g
