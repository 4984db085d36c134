#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "g2g/expr.hpp"
#include "g2g/funcspec.hpp"
#include "g2g/quadrature.hpp"

using namespace g2g;

TEST_CASE("parse basics") {
  CHECK(parse("1").eval1(0.3) == 1.0);
  CHECK(parse("u^2*(1-u)").arity() == 1);
  CHECK(parse("u^2*(1-u)").eval1(0.5) == doctest::Approx(0.125));
  CHECK(parse("exp(-(x+y))*y/(x+y)").arity() == 2);
  CHECK(parse("exp(r)").eval1(0.0) == 1.0);
  CHECK(parse("pi").eval1(0.0) == doctest::Approx(3.14159265358979324));
  CHECK(parse("e").eval1(0.0) == doctest::Approx(2.71828182845904524));
  CHECK(parse("2e-1").eval1(0.0) == doctest::Approx(0.2));
}

TEST_CASE("precedence: pow binds tighter than unary minus") {
  CHECK(parse("-u^2").eval1(3.0) == doctest::Approx(-9.0));
  CHECK(parse("(-u)^2").eval1(3.0) == doctest::Approx(9.0));
  CHECK(parse("u^-1").eval1(4.0) == doctest::Approx(0.25));
  CHECK(parse("-u*u").eval1(3.0) == doctest::Approx(-9.0));
  CHECK(parse("2^u^2").eval1(2.0) == doctest::Approx(16.0));  // right assoc
  CHECK(parse("1-u-u").eval1(1.0) == doctest::Approx(-1.0));  // left assoc
  CHECK(parse("2+u*3").eval1(4.0) == doctest::Approx(14.0));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("u +"), ParseError);
  CHECK_THROWS_AS(parse("(u"), ParseError);
  CHECK_THROWS_AS(parse("u @ 2"), ParseError);
  CHECK_THROWS_AS(parse("foo(u)"), ParseError);
  CHECK_THROWS_AS(parse("sin u"), ParseError);
  CHECK_THROWS_AS(parse("u*x"), ParseError);  // mixed variable alphabets
  CHECK_THROWS_AS(parse("u*r"), ParseError);
  try {
    parse("u + @");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("eval domain errors") {
  CHECK_THROWS_AS(parse("log(u)").eval1(0.0), EvalError);
  CHECK_THROWS_AS(parse("log(u-1)").eval1(0.5), EvalError);
  CHECK_THROWS_AS(parse("1/u").eval1(0.0), EvalError);
  CHECK_THROWS_AS(parse("u^-1").eval1(0.0), EvalError);
  CHECK_THROWS_AS(parse("sqrt(u-2)").eval1(1.0), EvalError);
  // Mismatched environment arity.
  CHECK_THROWS_AS(parse("x+y").eval1(0.5), EvalError);
  CHECK_THROWS_AS(parse("u").eval2(1.0, 2.0), EvalError);
}

TEST_CASE("print/parse round-trip evaluates identically") {
  const std::vector<std::string> exprs = {
      "u^2*(1-u)",
      "sin(pi*u)+cos(u)/2",
      "exp(-(x+y))*y/(x+y)",
      "sqrt(u)+arctan(u^2)",
      "1/(1+r)+r^2*exp(-r/2)",
      "-u^2+3.25e-2*u",
      "x^2+y^2-x*y/(1+x+y)",
      "log(1+u)*(2-u)^1.5",
  };
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  for (const auto& text : exprs) {
    const Expr original = parse(text);
    const Expr reparsed = parse(original.print());
    for (int i = 0; i < 100; ++i) {
      if (original.arity() == 2) {
        const double y = unif(rng), x = unif(rng);
        CHECK(original.eval2(y, x) == reparsed.eval2(y, x));
      } else {
        const double t = unif(rng);
        CHECK(original.eval1(t) == reparsed.eval1(t));
      }
    }
  }
}

TEST_CASE("FuncSpec wraps expressions, builtins and constants") {
  const FuncSpec one = FuncSpec::one();
  CHECK(one.is_one());
  CHECK(one.eval1(0.7) == 1.0);
  CHECK(one.eval2(2.0, 3.0) == 1.0);

  const FuncSpec c = FuncSpec::constant(2.5);
  CHECK_FALSE(c.is_one());
  CHECK(c.eval1(0.1) == 2.5);

  const FuncSpec f = FuncSpec::from_text("u^2");
  CHECK(f.arity() == 1);
  CHECK(f.eval1(3.0) == 9.0);
  CHECK_THROWS_AS(f.eval2(1.0, 2.0), EvalError);

  const FuncSpec w = FuncSpec::from_text("x*y");
  CHECK(w.arity() == 2);
  CHECK(w.eval2(3.0, 4.0) == 12.0);

  // Constant expression usable at either arity.
  const FuncSpec k = FuncSpec::from_text("1+1");
  CHECK(k.eval1(0.5) == 2.0);
  CHECK(k.eval2(1.0, 2.0) == 2.0);

  const FuncSpec fn = FuncSpec::from_function1("twice", [](double v) {
    return 2.0 * v;
  });
  CHECK(fn.eval1(4.0) == 8.0);
  CHECK(fn.label() == "twice");
}
