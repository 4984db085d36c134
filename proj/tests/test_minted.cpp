// Re-derives every frozen constant in support/minted.hpp from the oracle
// module, so the main-path tests that assert those constants stay gated
// on an independent computation.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "g2g/oracle.hpp"
#include "support/minted.hpp"

using namespace g2g::oracle;
namespace minted = g2g::minted;

namespace {
// r = t^2 regularizes the log endpoint for the grid oracle.
double log_weight_gamma(double s, double t_hi, long n) {
  return grid1d(
      [s](double t) {
        return 4.0 * std::log(t) * std::pow(t, 2.0 * s - 1.0) *
               std::exp(-t * t);
      },
      0.0, t_hi, n);
}
}  // namespace

TEST_CASE("gamma prime values from the 1D grid oracle") {
  CHECK(std::abs(log_weight_gamma(2.0, 7.5, 2000000) - minted::kGammaPrime2) <
        1e-9);
  CHECK(std::abs(log_weight_gamma(1.0, 7.5, 2000000) - minted::kGammaPrime1) <
        1e-9);
}

TEST_CASE("log-weighted quadrant integral from grid2d") {
  const double v = grid2d(
      [](double t, double y) {
        return 4.0 * t * std::log(t) * std::exp(-t * t - y);
      },
      7.0, 44.0, 3000);
  CHECK(std::abs(v - minted::kLogWeightQuadrant) < 1e-5);
}

TEST_CASE("polynomial quadrant integrals from grid2d") {
  const double a = grid2d(
      [](double x, double y) { return (x + y * y) * std::exp(-x - y); }, 44.0,
      44.0, 3000);
  CHECK(std::abs(a - minted::kXPlusYSquared) < 1e-4);

  const double b = grid2d(
      [](double x, double y) { return y * std::exp(-x - y); }, 44.0, 44.0,
      3000);
  CHECK(std::abs(b - minted::kLinearPair) < 1e-4);

  const double c = grid2d(
      [](double x, double y) {
        const double u = y / (x + y);
        return u * u * std::exp(-x - y);
      },
      44.0, 44.0, 3000);
  CHECK(std::abs(c - minted::kUSquaredQuadrant) < 1e-3);
}

TEST_CASE("exponential decay constant") {
  const double v =
      grid1d([](double r) { return std::exp(-2.0 * r); }, 0.0, 30.0, 500000);
  CHECK(std::abs(v - minted::kExpDecayHalf) < 1e-8);
}

TEST_CASE("damped trigonometric 1D constants") {
  const double c1 = grid1d(
      [](double r) { return std::exp(-r) * std::cos(r); }, 0.0, 60.0, 2000000);
  CHECK(std::abs(c1 - minted::kCosS1) < 1e-8);
  const double s1 = grid1d(
      [](double r) { return std::exp(-r) * std::sin(r); }, 0.0, 60.0, 2000000);
  CHECK(std::abs(s1 - minted::kSinS1) < 1e-8);
  const double c2 = grid1d(
      [](double r) { return r * std::exp(-r) * std::cos(r); }, 0.0, 60.0,
      2000000);
  CHECK(std::abs(c2 - minted::kCosS2) < 1e-8);
  const double s2 = grid1d(
      [](double r) { return r * std::exp(-r) * std::sin(r); }, 0.0, 60.0,
      2000000);
  CHECK(std::abs(s2 - minted::kSinS2) < 1e-8);
}

TEST_CASE("general-g damped constants") {
  const double r2 = grid1d(
      [](double r) { return r * r * std::exp(-2.0 * r) * std::sin(r); }, 0.0,
      40.0, 2000000);
  CHECK(std::abs(r2 - minted::kR2Exp2Sin) < 1e-9);

  const double lhs = grid2d(
      [](double x, double y) {
        return y * std::exp(-2.0 * (x + y)) * std::sin(x + y);
      },
      30.0, 30.0, 3000);
  CHECK(std::abs(lhs - minted::kDamped2dLhs) < 1e-6);
}

TEST_CASE("geometric-series beta integral") {
  const double v = grid1d(
      [](double x) { return x / (2.0 - x) * x * (1.0 - x); }, 0.0, 1.0,
      1000000);
  CHECK(std::abs(v - minted::kGeomSeriesBeta) < 1e-10);
}

TEST_CASE("hypergeometric example integrals") {
  const double v = grid1d([](double t) { return t / (1.0 - 0.5 * t); }, 0.0,
                          1.0, 1000000);
  CHECK(std::abs(v - minted::kFtZHalf) < 1e-10);

  const double z = 0.5;
  const double f = series1d(
      [z](long n) { return std::pow(z, n) / static_cast<double>(n + 1); }, 200);
  CHECK(std::abs(f - minted::kTwoLnTwo) < 1e-14);
}

TEST_CASE("alternating Pochhammer series at z = -1") {
  // a=1/2, b=3/2, c=5/2; terms via the ratio recurrence; the tail is
  // alternating with slowly decaying terms, so the average of the last
  // two partial sums removes the leading truncation error.
  const double a = 0.5, b = 1.5, c = 2.5, z = -1.0;
  double term = 1.0, sum = 0.0, comp = 0.0, prev = 0.0;
  for (long n = 0; n < 100000; ++n) {
    const double s = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - s) + term;
    else
      comp += (term - s) + sum;
    prev = sum + comp;
    sum = s;
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    if (std::abs(term) < 1e-16 * std::abs(sum)) break;
  }
  const double averaged = 0.5 * ((sum + comp) + prev);
  CHECK(std::abs(averaged - minted::kHypZMinusOne) < 1e-10);
}
