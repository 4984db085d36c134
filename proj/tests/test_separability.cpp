#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "g2g/quadrature.hpp"
#include "g2g/separability.hpp"

using namespace g2g;

namespace {
constexpr double kTol = 1e-9;
constexpr double kPi = 3.141592653589793238462643383279502884;

SeparabilityReport detect_text(const std::string& omega, double tol = kTol,
                               int grid = 12) {
  return detect_separable(FuncSpec::from_text(omega), tol, grid);
}
}  // namespace

TEST_CASE("spec examples") {
  // (y/(x+y))^2 (x+y) e^(x+y) = u^2 * s e^s.
  const auto a = detect_text("(y/(x+y))^2*(x+y)*exp(x+y)");
  CHECK(a.separable);
  CHECK(a.max_residual <= kTol);

  // x*y = s^2 u(1-u).
  const auto b = detect_text("x*y");
  CHECK(b.separable);
  CHECK(b.f_extracted.has_value());
  // f(u) proportional to u(1-u) at anchor s0 = 1.
  CHECK(b.f_extracted->eval1(0.5) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(b.g_extracted->eval1(3.0) == doctest::Approx(9.0).epsilon(1e-12));

  // x + y^2 = s(1-u) + s^2 u^2 does not factorize.
  const auto c = detect_text("x+y^2");
  CHECK_FALSE(c.separable);
  CHECK(c.certification == Certification::not_separable);
  CHECK(c.max_residual > 1e-2);
}

TEST_CASE("acceptance corpus: five separable kernels") {
  const std::vector<std::string> separable = {
      "1",
      "x*y",
      "(y/(x+y))^2*(x+y)*exp(x+y)",
      "exp(-(x+y))*y/(x+y)",
      "(x+y)^2/(1+x+y)",
  };
  for (const auto& text : separable) {
    const auto rep = detect_separable(FuncSpec::from_text(text), kTol, 12);
    INFO("kernel: " << text);
    CHECK(rep.certification == Certification::separable);
    CHECK(rep.separable);
    CHECK(rep.max_residual <= kTol);
  }
}

TEST_CASE("acceptance corpus: five non-separable kernels with margin") {
  const std::vector<std::string> non_separable = {
      "x+y^2", "1+x", "x*y+1", "exp(x)", "2+sin(x)",
  };
  for (const auto& text : non_separable) {
    const auto rep = detect_separable(FuncSpec::from_text(text), kTol, 12);
    INFO("kernel: " << text);
    CHECK(rep.certification == Certification::not_separable);
    CHECK_FALSE(rep.separable);
    // Clear margin, not a borderline call.
    CHECK(rep.max_residual >= 1e3 * kTol);
  }
}

TEST_CASE("vanishing kernel is inconclusive, not false") {
  // (x+y-20)^2 touches zero at the outermost s probe.
  const auto rep = detect_text("(x+y-20)^2");
  CHECK(rep.certification == Certification::inconclusive);
  CHECK_FALSE(rep.separable);
  CHECK_FALSE(rep.f_extracted.has_value());
}

TEST_CASE("extraction consistency over the probe grid") {
  const FuncSpec omega = FuncSpec::from_text("x*y*exp(-(x+y)/2)");
  const auto rep = detect_separable(omega, kTol, 12);
  REQUIRE(rep.separable);
  double worst = 0.0;
  for (int i = 0; i < 12; ++i) {
    const double u = 0.5 * (1.0 + std::cos(kPi * (2.0 * i + 1.0) / 24.0));
    for (int j = 0; j < 12; ++j) {
      const double s = 0.1 * std::exp(std::log(200.0) * j / 11.0);
      const double direct = omega.eval2(s * u, s * (1.0 - u));
      const double split = rep.f_extracted->eval1(u) * rep.g_extracted->eval1(s);
      worst = std::max(worst,
                       std::abs(split - direct) / (1.0 + std::abs(direct)));
    }
  }
  CHECK(worst <= 10.0 * kTol);
}

TEST_CASE("anchor invariance up to a constant split") {
  const FuncSpec omega = FuncSpec::from_text("x*y*exp(-(x+y)/2)");
  const auto rep1 = detect_separable(omega, kTol, 12, 0.5, 1.0);
  const auto rep2 = detect_separable(omega, kTol, 12, 1.0 / 3.0, 2.0);
  REQUIRE(rep1.separable);
  REQUIRE(rep2.separable);

  // f changes by a constant factor kappa, g by 1/kappa.
  const double kappa =
      rep2.f_extracted->eval1(0.4) / rep1.f_extracted->eval1(0.4);
  for (double u : {0.15, 0.35, 0.6, 0.85})
    CHECK(rep2.f_extracted->eval1(u) / rep1.f_extracted->eval1(u) ==
          doctest::Approx(kappa).epsilon(1e-9));

  // The product is anchor-independent.
  for (double u : {0.2, 0.5, 0.8})
    for (double s : {0.3, 1.7, 9.0}) {
      const double p1 = rep1.f_extracted->eval1(u) * rep1.g_extracted->eval1(s);
      const double p2 = rep2.f_extracted->eval1(u) * rep2.g_extracted->eval1(s);
      CHECK(p2 == doctest::Approx(p1).epsilon(10.0 * kTol));
    }
}

TEST_CASE("argument checks") {
  const FuncSpec omega = FuncSpec::from_text("x*y");
  CHECK_THROWS_AS(detect_separable(omega, -1.0, 12), DomainError);
  CHECK_THROWS_AS(detect_separable(omega, kTol, 2), DomainError);
  CHECK_THROWS_AS(detect_separable(omega, kTol, 12, 1.5, 1.0), DomainError);
  CHECK_THROWS_AS(detect_separable(FuncSpec::from_text("u^2"), kTol, 12),
                  DomainError);
}
