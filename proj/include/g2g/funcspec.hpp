#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "g2g/expr.hpp"

namespace g2g {

/// A one- or two-variable real function, either a parsed expression tree
/// or an opaque evaluator. Two-variable specs use the argument order
/// (y, x). Copies are cheap (shared immutable state).
class FuncSpec {
 public:
  /// The constant-one builtin; usable at either arity.
  static FuncSpec one();
  /// Any fixed constant; usable at either arity.
  static FuncSpec constant(double v);
  static FuncSpec from_expr(Expr e);
  static FuncSpec from_text(const std::string& text) {
    return from_expr(parse(text));
  }
  static FuncSpec from_function1(std::string label,
                                 std::function<double(double)> fn);
  static FuncSpec from_function2(std::string label,
                                 std::function<double(double, double)> fn);

  /// 1 or 2; constants report 1 but evaluate at either arity.
  int arity() const { return arity_; }
  bool is_one() const { return is_one_; }
  bool is_constant() const { return constant_.has_value(); }
  const std::string& label() const { return label_; }

  double eval1(double t) const;
  double eval2(double y, double x) const;

 private:
  FuncSpec() = default;
  int arity_ = 1;
  bool is_one_ = false;
  std::optional<double> constant_;
  std::shared_ptr<const Expr> expr_;
  std::shared_ptr<const std::function<double(double)>> fn1_;
  std::shared_ptr<const std::function<double(double, double)>> fn2_;
  std::string label_;
};

}  // namespace g2g
