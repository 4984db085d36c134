#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

namespace g2g {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) +
                           ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Immutable expression tree over the grammar
///   identifiers [a-z]+, real literals, operators + - * / ^ with
///   precedence pow > unary minus > mul/div > add/sub, functions
///   exp log sqrt sin cos arctan, constants pi and e.
/// Variables: u (one variable on (0,1)), r (one variable on (0,inf)),
/// x and y (two variables on the quadrant).
class Expr {
 public:
  struct Node;  // opaque; defined in the implementation
  enum class UnaryOp { neg, exp, log, sqrt, sin, cos, arctan };
  enum class BinaryOp { add, sub, mul, div, pow };

  static Expr constant(double v);
  static Expr variable(char name);
  static Expr unary(UnaryOp op, Expr operand);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);

  Expr(const Expr&);
  Expr(Expr&&) noexcept;
  Expr& operator=(const Expr&);
  Expr& operator=(Expr&&) noexcept;
  ~Expr();

  bool uses_variable(char name) const;
  /// 0 = constant only, 1 = uses u or r, 2 = uses x and/or y.
  /// Mixing the one-variable and two-variable alphabets is a ParseError
  /// at construction.
  int arity() const;

  /// Evaluate with the single variable bound to t (arity 0 or 1 only).
  double eval1(double t) const;
  /// Evaluate with y and x bound (arity 0 or 2 only).
  double eval2(double y, double x) const;

  std::string print() const;

 private:
  explicit Expr(std::shared_ptr<const Node> root);
  std::shared_ptr<const Node> root_;
};

/// Parse expression text. Throws ParseError with position and message.
Expr parse(const std::string& text);

}  // namespace g2g
