#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "g2g/oracle.hpp"

using namespace g2g::oracle;

TEST_CASE("grid2d classical quadrant integrals") {
  const double g1 = grid2d(
      [](double x, double y) { return std::exp(-x - y); }, 40.0, 40.0, 2000);
  CHECK(std::abs(g1 - 1.0) < 1e-4);

  const double g2 = grid2d(
      [](double x, double y) { return y * std::exp(-x - y); }, 40.0, 40.0,
      2000);
  CHECK(std::abs(g2 - 1.0) < 1e-3);

  const double g3 = grid2d(
      [](double x, double y) { return (x + y) * std::exp(-x - y); }, 40.0,
      40.0, 2000);
  CHECK(std::abs(g3 - 2.0) < 1e-3);
}

TEST_CASE("grid2d rejects a coarse grid") {
  CHECK_THROWS_AS(grid2d([](double, double) { return 1.0; }, 1.0, 1.0, 50),
                  std::invalid_argument);
}

TEST_CASE("mc2d classical quadrant integrals within 3 sigma") {
  const auto m1 = mc2d([](double x, double y) { return std::exp(-x - y); },
                       40.0, 40.0, 1000000, 42);
  CHECK(std::abs(m1.value - 1.0) < 3.0 * m1.std_err);

  const auto m2 = mc2d([](double x, double y) { return y * std::exp(-x - y); },
                       40.0, 40.0, 1000000, 43);
  CHECK(std::abs(m2.value - 1.0) < 3.0 * m2.std_err);

  const auto m3 = mc2d(
      [](double x, double y) { return x * y * std::exp(-x - y); }, 40.0, 40.0,
      1000000, 44);
  CHECK(std::abs(m3.value - 1.0) < 3.0 * m3.std_err);
}

TEST_CASE("mc2d is bit-reproducible for a fixed seed") {
  const auto a = mc2d([](double x, double y) { return std::exp(-x - y); },
                      40.0, 40.0, 50000, 7);
  const auto b = mc2d([](double x, double y) { return std::exp(-x - y); },
                      40.0, 40.0, 50000, 7);
  CHECK(a.value == b.value);
  CHECK(a.std_err == b.std_err);
  const auto c = mc2d([](double x, double y) { return std::exp(-x - y); },
                      40.0, 40.0, 50000, 8);
  CHECK(a.value != c.value);
}

TEST_CASE("grid2d and mc2d cross-agree on the corpus-style integrands") {
  const auto cases = {
      +[](double x, double y) { return std::exp(-x - y); },
      +[](double x, double y) { return y * std::exp(-x - y); },
      +[](double x, double y) { return (x + y * y) * std::exp(-x - y); },
  };
  int seed = 100;
  for (auto f : cases) {
    const double g = grid2d(f, 40.0, 40.0, 1200);
    const auto m = mc2d(f, 40.0, 40.0, 400000, seed++);
    CHECK(std::abs(g - m.value) < 3.0 * (1e-3 + 3.0 * m.std_err));
  }
}

TEST_CASE("series1d sums classical series") {
  const double geo =
      series1d([](long n) { return std::pow(0.5, n); }, 60);
  CHECK(geo == doctest::Approx(2.0).epsilon(1e-15));

  double fact = 1.0;
  const double e = series1d(
      [&fact](long n) {
        if (n > 0) fact *= static_cast<double>(n);
        return 1.0 / fact;
      },
      25);
  CHECK(e == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
}

TEST_CASE("series1d Pochhammer oracle reproduces 2 log 2") {
  const double z = 0.5;
  // F(1,1;2;z) has terms z^n/(n+1).
  const double f = series1d(
      [z](long n) { return std::pow(z, n) / static_cast<double>(n + 1); }, 60);
  CHECK(f == doctest::Approx(-std::log(1.0 - z) / z).epsilon(1e-12));
  CHECK(f == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
}
