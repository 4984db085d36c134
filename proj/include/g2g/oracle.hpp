#pragma once

#include <cstdint>
#include <functional>

namespace g2g {
namespace oracle {

/// Midpoint rule on (lo, hi) with n cells. Brute-force reference; shares
/// no machinery with the production engines.
double grid1d(const std::function<double(double)>& f, double lo, double hi,
              long n);

/// Midpoint tensor grid on (0, x_max) x (0, y_max) with n*n cells. The
/// integrand receives raw (x, y) and must include all weights itself.
double grid2d(const std::function<double(double, double)>& f, double x_max,
              double y_max, long n);

struct McResult {
  double value;
  double std_err;
};

/// Uniform Monte-Carlo estimate over the same box, deterministically
/// seeded; the structurally different second oracle.
McResult mc2d(const std::function<double(double, double)>& f, double x_max,
              double y_max, long n_samples, std::uint64_t seed);

/// Neumaier-compensated sum of term(n) for n = 0 .. n_terms-1.
double series1d(const std::function<double(long)>& term, long n_terms);

}  // namespace oracle
}  // namespace g2g
