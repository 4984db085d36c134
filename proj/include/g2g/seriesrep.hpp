#pragma once

#include <vector>

#include "g2g/genspecial.hpp"

namespace g2g {

/// Taylor coefficients a_L, a_{L+1}, ... of f(x) = sum a_n x^n, plus the
/// truncation length N (number of leading terms summed).
struct SeriesSpec {
  std::vector<double> coeffs;
  int start = 1;       // L; 0 accepted
  int truncation = 1;  // N

  SeriesSpec(std::vector<double> coeffs_, int start_, int truncation_);
  /// Throws DomainError unless every coefficient is > 0.
  void assert_positive() const;
};

/// B_f(alpha, beta) = Gamma(beta) sum_n Gamma(alpha+n) a_n /
/// Gamma(alpha+beta+n), terms formed as log-gamma differences. The stated
/// hypothesis range alpha > 1, beta > 1 is enforced.
EvalResult beta_f_series(const SeriesSpec& sp, double alpha, double beta);

/// Gamma2d = Gamma(beta) Gamma_g(alpha+beta+gamma) sum_n Gamma(alpha+n)
/// a_n / Gamma(alpha+beta+n); Gamma_g evaluated by quadrature once.
EvalResult gamma2d_series(const SeriesSpec& sp, const FuncSpec& g,
                          const Params& p, const QuadConfig& cfg = {});

/// The same value through per-term two-dimensional factors:
///   Gamma_g(S) sum_n a_n Gamma2d_{f=1,g}(alpha+n, beta; gamma) /
///   Gamma_g(S+n),  S = alpha+beta+gamma,
/// every factor by quadrature; the internal consistency check of the
/// three series forms.
EvalResult gamma2d_series_viagamma2d(const SeriesSpec& sp, const FuncSpec& g,
                                     const Params& p,
                                     const QuadConfig& cfg = {});

/// The function defined by the coefficient list, for quadrature
/// cross-checks.
FuncSpec series_function(const SeriesSpec& sp);

}  // namespace g2g
