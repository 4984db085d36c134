#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "g2g/damped.hpp"
#include "support/minted.hpp"

using namespace g2g;
namespace minted = g2g::minted;

TEST_CASE("laplace closed forms at the spec points") {
  CHECK(laplace_cos_1d(1, 1, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(laplace_cos_1d(1, 1, 1) ==
        doctest::Approx(minted::kCosS1).epsilon(1e-13));
  CHECK(std::abs(laplace_cos_1d(2, 1, 1) - minted::kCosS2) < 1e-14);
  CHECK(laplace_sin_1d(1, 1, 0) == 0.0);  // exactly
  CHECK(laplace_sin_1d(1, 1, 1) ==
        doctest::Approx(minted::kSinS1).epsilon(1e-13));
  CHECK(laplace_sin_1d(2, 1, 1) ==
        doctest::Approx(minted::kSinS2).epsilon(1e-13));
  CHECK_THROWS_AS(laplace_cos_1d(0.0, 1, 1), DomainError);
  CHECK_THROWS_AS(laplace_cos_1d(1.0, 0.0, 1), DomainError);
  CHECK_THROWS_AS(laplace_sin_1d(1.0, -1.0, 0.0), DomainError);
}

TEST_CASE("laplace forms agree with quadrature") {
  QuadConfig cfg;
  for (double s : {0.7, 1.0, 2.5})
    for (double a : {0.5, 1.0, 2.0})
      for (double b : {0.0, 0.5, 1.0, 3.0}) {
        const EvalResult q = integrate_0inf_weighted(
            [a, b](double r) {
              return std::exp((1.0 - a) * r) * std::cos(b * r);
            },
            s, cfg.with_abs_tol(1e-13));
        INFO("s=" << s << " a=" << a << " b=" << b);
        CHECK(std::abs(q.value - laplace_cos_1d(s, a, b)) <
              1e-10 * std::exp(std::lgamma(s)) / std::pow(a, s));
      }
}

TEST_CASE("Pythagorean identity to 1e-12 relative") {
  for (double s : {0.5, 1.0, 2.7, 10.0})
    for (double a : {0.5, 1.0, 2.0})
      for (double b : {0.0, 0.5, 1.0, 3.0, -2.0}) {
        const double c = laplace_cos_1d(s, a, b);
        const double sn = laplace_sin_1d(s, a, b);
        const double lhs = c * c + sn * sn;
        const double rhs = std::exp(2.0 * std::lgamma(s) -
                                    s * std::log(a * a + b * b));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      }
}

TEST_CASE("scaling invariance to 1e-12 relative") {
  for (double kappa : {0.25, 2.0, 7.5}) {
    for (double s : {0.8, 1.5, 4.0}) {
      const double base = laplace_cos_1d(s, 1.3, 0.9);
      const double scaled = laplace_cos_1d(s, kappa * 1.3, kappa * 0.9);
      CHECK(scaled ==
            doctest::Approx(std::pow(kappa, -s) * base).epsilon(1e-12));
      const double base_s = laplace_sin_1d(s, 1.3, 0.9);
      const double scaled_s = laplace_sin_1d(s, kappa * 1.3, kappa * 0.9);
      CHECK(scaled_s ==
            doctest::Approx(std::pow(kappa, -s) * base_s).epsilon(1e-12));
    }
  }
}

TEST_CASE("negative b keeps the right branch") {
  const double plus = laplace_sin_1d(1.5, 1.0, 2.0);
  const double minus = laplace_sin_1d(1.5, 1.0, -2.0);
  CHECK(minus == doctest::Approx(-plus).epsilon(1e-14));
  const double cp = laplace_cos_1d(1.5, 1.0, 2.0);
  const double cm = laplace_cos_1d(1.5, 1.0, -2.0);
  CHECK(cm == doctest::Approx(cp).epsilon(1e-14));
}

TEST_CASE("gamma2d_damped spec examples") {
  // b = 0 cos reduces to the plain factorization value.
  const EvalResult r0 =
      gamma2d_damped(FuncSpec::one(), std::nullopt, Params(1, 1, 0), 1.0, 0.0,
                     TrigKind::cos, DampedMode::reduced);
  CHECK(r0.value == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(r0.path == Path::closed_form);

  // a = 1, b = 1 cos: B(1,1) Gamma(2)/2 cos(pi/2) = 0.
  const EvalResult r1 =
      gamma2d_damped(FuncSpec::one(), std::nullopt, Params(1, 1, 0), 1.0, 1.0,
                     TrigKind::cos, DampedMode::reduced);
  CHECK(std::abs(r1.value) < 1e-14);
  const EvalResult r1d =
      gamma2d_damped(FuncSpec::one(), std::nullopt, Params(1, 1, 0), 1.0, 1.0,
                     TrigKind::cos, DampedMode::direct);
  CHECK(std::abs(r1d.value) < 1e-9);

  // f(u)=u, g(s)=s, a=2, b=1 sin: B(2,1) * integral r^2 e^-2r sin r
  //   = 0.5 * 22/125 = 0.088 (minted both sides).
  const EvalResult r2 = gamma2d_damped(
      FuncSpec::from_text("u"), FuncSpec::from_text("r"), Params(1, 1, 0), 2.0,
      1.0, TrigKind::sin, DampedMode::reduced);
  CHECK(r2.value == doctest::Approx(minted::kDamped2dLhs).epsilon(1e-9));
  CHECK(r2.path == Path::factorized);
  const EvalResult r2d = gamma2d_damped(
      FuncSpec::from_text("u"), FuncSpec::from_text("r"), Params(1, 1, 0), 2.0,
      1.0, TrigKind::sin, DampedMode::direct);
  CHECK(r2d.value == doctest::Approx(minted::kDamped2dLhs).epsilon(1e-8));
}

TEST_CASE("direct and reduced agree across the (a, b) grid") {
  const FuncSpec f = FuncSpec::from_text("u^2");
  const FuncSpec g = FuncSpec::from_text("exp(-r/2)");
  const Params p(1.5, 1.0, 0.5);
  QuadConfig cfg;
  cfg.rel_tol = 1e-9;
  for (double a : {0.5, 1.0, 2.0})
    for (double b : {0.0, 0.5, 1.0, 3.0})
      for (TrigKind kind : {TrigKind::cos, TrigKind::sin}) {
        const EvalResult direct =
            gamma2d_damped(f, g, p, a, b, kind, DampedMode::direct, cfg);
        const EvalResult reduced =
            gamma2d_damped(f, g, p, a, b, kind, DampedMode::reduced, cfg);
        INFO("a=" << a << " b=" << b
                  << " kind=" << (kind == TrigKind::cos ? "cos" : "sin"));
        CHECK(std::abs(direct.value - reduced.value) <=
              10.0 * (direct.err_est + reduced.err_est));
      }
}

TEST_CASE("oscillation cap on the direct path") {
  CHECK_THROWS_AS(
      gamma2d_damped(FuncSpec::one(), std::nullopt, Params(1, 1, 0), 1.0, 9.0,
                     TrigKind::cos, DampedMode::direct),
      OscillationCap);
  // The reduced path accepts large b.
  const EvalResult r =
      gamma2d_damped(FuncSpec::one(), std::nullopt, Params(1, 1, 0), 1.0, 50.0,
                     TrigKind::cos, DampedMode::reduced);
  CHECK(std::isfinite(r.value));
}
