#include "g2g/funcspec.hpp"

#include <sstream>
#include <utility>

#include "g2g/quadrature.hpp"  // EvalError

namespace g2g {

FuncSpec FuncSpec::one() {
  FuncSpec f;
  f.is_one_ = true;
  f.constant_ = 1.0;
  f.label_ = "1";
  return f;
}

FuncSpec FuncSpec::constant(double v) {
  if (v == 1.0) return one();
  FuncSpec f;
  f.constant_ = v;
  std::ostringstream os;
  os.precision(17);
  os << v;
  f.label_ = os.str();
  return f;
}

FuncSpec FuncSpec::from_expr(Expr e) {
  const int a = e.arity();
  FuncSpec f;
  f.arity_ = a == 0 ? 1 : a;
  f.expr_ = std::make_shared<const Expr>(std::move(e));
  f.label_ = f.expr_->print();
  if (a == 0) {
    const double v = f.expr_->eval1(0.5);
    f.constant_ = v;
    f.is_one_ = (v == 1.0);
  }
  return f;
}

FuncSpec FuncSpec::from_function1(std::string label,
                                  std::function<double(double)> fn) {
  FuncSpec f;
  f.arity_ = 1;
  f.fn1_ = std::make_shared<const std::function<double(double)>>(std::move(fn));
  f.label_ = std::move(label);
  return f;
}

FuncSpec FuncSpec::from_function2(std::string label,
                                  std::function<double(double, double)> fn) {
  FuncSpec f;
  f.arity_ = 2;
  f.fn2_ =
      std::make_shared<const std::function<double(double, double)>>(std::move(fn));
  f.label_ = std::move(label);
  return f;
}

double FuncSpec::eval1(double t) const {
  if (constant_) return *constant_;
  if (fn1_) return (*fn1_)(t);
  if (expr_) {
    if (arity_ != 1)
      throw EvalError("FuncSpec '" + label_ + "' is not a one-variable function");
    return expr_->eval1(t);
  }
  throw EvalError("FuncSpec '" + label_ + "' cannot be evaluated at arity 1");
}

double FuncSpec::eval2(double y, double x) const {
  if (constant_) return *constant_;
  if (fn2_) return (*fn2_)(y, x);
  if (expr_) {
    if (arity_ != 2)
      throw EvalError("FuncSpec '" + label_ + "' is not a two-variable function");
    return expr_->eval2(y, x);
  }
  throw EvalError("FuncSpec '" + label_ + "' cannot be evaluated at arity 2");
}

}  // namespace g2g
