#include "g2g/oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace g2g {
namespace oracle {

double grid1d(const std::function<double(double)>& f, double lo, double hi,
              long n) {
  if (n < 100) throw std::invalid_argument("grid1d: n must be >= 100");
  if (!(hi > lo)) throw std::invalid_argument("grid1d: empty interval");
  const double h = (hi - lo) / static_cast<double>(n);
  double sum = 0.0;
  for (long i = 0; i < n; ++i) {
    const double x = lo + (static_cast<double>(i) + 0.5) * h;
    const double v = f(x);
    if (!std::isfinite(v))
      throw std::runtime_error("grid1d: non-finite integrand value");
    sum += v;
  }
  return sum * h;
}

double grid2d(const std::function<double(double, double)>& f, double x_max,
              double y_max, long n) {
  if (n < 100) throw std::invalid_argument("grid2d: n must be >= 100");
  const double hx = x_max / static_cast<double>(n);
  const double hy = y_max / static_cast<double>(n);
  double sum = 0.0;
  for (long i = 0; i < n; ++i) {
    const double x = (static_cast<double>(i) + 0.5) * hx;
    double row = 0.0;
    for (long j = 0; j < n; ++j) {
      const double y = (static_cast<double>(j) + 0.5) * hy;
      const double v = f(x, y);
      if (!std::isfinite(v))
        throw std::runtime_error("grid2d: non-finite integrand value");
      row += v;
    }
    sum += row;
  }
  return sum * hx * hy;
}

McResult mc2d(const std::function<double(double, double)>& f, double x_max,
              double y_max, long n_samples, std::uint64_t seed) {
  if (n_samples < 10000)
    throw std::invalid_argument("mc2d: n_samples must be >= 10^4");
  std::mt19937_64 rng(seed);
  // Explicit 53-bit scaling keeps the stream identical across standard
  // library implementations on one platform.
  const auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  double sum = 0.0;
  double sum_sq = 0.0;
  for (long i = 0; i < n_samples; ++i) {
    const double x = uniform() * x_max;
    const double y = uniform() * y_max;
    const double v = f(x, y);
    if (!std::isfinite(v))
      throw std::runtime_error("mc2d: non-finite integrand value");
    sum += v;
    sum_sq += v * v;
  }
  const double inv_n = 1.0 / static_cast<double>(n_samples);
  const double mean = sum * inv_n;
  const double var = std::max(0.0, sum_sq * inv_n - mean * mean);
  const double volume = x_max * y_max;
  McResult r;
  r.value = volume * mean;
  r.std_err = volume * std::sqrt(var * inv_n);
  return r;
}

double series1d(const std::function<double(long)>& term, long n_terms) {
  if (n_terms < 1) throw std::invalid_argument("series1d: need >= 1 term");
  double sum = 0.0;
  double comp = 0.0;  // Neumaier correction
  for (long n = 0; n < n_terms; ++n) {
    const double t = term(n);
    const double s = sum + t;
    if (std::abs(sum) >= std::abs(t))
      comp += (sum - s) + t;
    else
      comp += (t - s) + sum;
    sum = s;
  }
  return sum + comp;
}

}  // namespace oracle
}  // namespace g2g
