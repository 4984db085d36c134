#pragma once

#include "g2g/genspecial.hpp"

namespace g2g {

/// Orders of the (log(x+y))^l (log x)^n (log y)^m weights.
struct LogMomentOrder {
  int l = 0;
  int m = 0;
  int n = 0;

  LogMomentOrder(int l_, int m_, int n_);
  int total() const { return l + m + n; }
};

/// Quadrant integral of f(y/(x+y)) g(x+y) (log(x+y))^l (log x)^n
/// (log y)^m y^(alpha-1) x^(beta-1) (x+y)^gamma e^(-x-y), the mixed
/// parameter derivative of gamma2d evaluated directly per node.
EvalResult gamma2d_logmoment_direct(const FuncSpec& f, const FuncSpec& g,
                                    const Params& p, const LogMomentOrder& ord,
                                    const QuadConfig& cfg = {});

/// The same integral through the double binomial sum of 1D log-weighted
/// factors. At order (0,0,0) this is the factorized gamma2d product,
/// bitwise.
EvalResult gamma2d_logmoment_factorized(const FuncSpec& f, const FuncSpec& g,
                                        const Params& p,
                                        const LogMomentOrder& ord,
                                        const QuadConfig& cfg = {});

/// Gamma^(k)(s) = integral_0^inf (log x)^k x^(s-1) e^(-x) dx.
EvalResult gamma_derivative(int k, double s, const QuadConfig& cfg = {});

/// d^p/d_alpha^p d^q/d_beta^q B(alpha, beta) as a log-weighted integral.
EvalResult beta_derivative(int p, int q, double alpha, double beta,
                           const QuadConfig& cfg = {});

/// Residual of the classical identity
///   Gamma^(n)(beta) Gamma^(m)(alpha) =
///     sum_{j<=m} sum_{i<=n} C(m,j) C(n,i) Gamma^(i+j)(alpha+beta)
///       d^{n-i}_beta d^{m-j}_alpha B(alpha, beta)
/// with every derivative realized by quadrature.
Residual classical_derivative_identity(int m, int n, double alpha, double beta,
                                       const QuadConfig& cfg = {});

}  // namespace g2g
