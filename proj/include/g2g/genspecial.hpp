#pragma once

#include <optional>
#include <utility>

#include "g2g/funcspec.hpp"
#include "g2g/quadrature.hpp"

namespace g2g {

/// Real parameter bundle. alpha > 0, beta > 0, gamma >= 0 are enforced at
/// construction; nu/om/lam are the same values under the names used by
/// the general-Omega form. a > 0 and b feed the damped integrals.
struct Params {
  double alpha;
  double beta;
  double gamma;
  double a;
  double b;

  Params(double alpha_, double beta_, double gamma_ = 0.0, double a_ = 1.0,
         double b_ = 0.0);

  double nu() const { return alpha; }
  double om() const { return beta; }
  double lam() const { return gamma; }
  double exponent_sum() const { return alpha + beta + gamma; }
};

/// Gamma_g(omega) = integral_0^inf g(x) x^(omega-1) e^(-x) dx.
EvalResult gamma_g(const FuncSpec& g, double omega, const QuadConfig& cfg = {});

/// B_f(alpha, beta) = integral_0^1 f(x) x^(alpha-1) (1-x)^(beta-1) dx.
EvalResult beta_f(const FuncSpec& f, double alpha, double beta,
                  const QuadConfig& cfg = {});

/// Half-line representation of B_f:
///   integral_0^inf f(y/(1+y)) y^(alpha-1) / (1+y)^(alpha+beta) dy,
/// evaluated through the substitution y = t/(1-t) without algebraic
/// simplification, as an independent route to the same value.
EvalResult beta_f_halfline(const FuncSpec& f, double alpha, double beta,
                           const QuadConfig& cfg = {});

enum class Gamma2dMode { direct, factorized, auto_select };

/// The two-dimensional generalized gamma function
///   integral over the quadrant of
///     f(y/(x+y)) g(x+y) y^(alpha-1) x^(beta-1) (x+y)^gamma e^(-x-y).
/// direct: full 2D quadrature. factorized: B_f(alpha,beta) *
/// Gamma_g(alpha+beta+gamma). auto: factorized.
EvalResult gamma2d(const FuncSpec& f, const FuncSpec& g, const Params& p,
                   const QuadConfig& cfg = {},
                   Gamma2dMode mode = Gamma2dMode::auto_select);

/// Evaluates both routes and throws Inconsistent when they disagree
/// beyond 100x the combined error estimate.
struct CrossCheck {
  EvalResult direct;
  EvalResult factorized;
  double abs_discrepancy;
  double rel_discrepancy;
};
CrossCheck gamma2d_crosscheck(const FuncSpec& f, const FuncSpec& g,
                              const Params& p, const QuadConfig& cfg = {});

/// General-Omega quadrant form: Omega(y,x) y^(nu-1) x^(om-1) (x+y)^lam
/// e^(-x-y). With certify_separable set, a kernel certified separable by
/// the cross-ratio test is re-routed through the factorized path.
EvalResult gamma2d_omega(const FuncSpec& omega, const Params& p,
                         const QuadConfig& cfg = {},
                         bool certify_separable = false);

/// Polar-coordinate representation over phi in (0, pi/2), r in (0, inf);
/// an independent cross-check route for gamma2d.
EvalResult gamma2d_polar(const FuncSpec& f, const FuncSpec& g, const Params& p,
                         const QuadConfig& cfg = {});

/// A residual plus the scale of the terms that formed it and the combined
/// error estimate of the quadratures involved.
struct Residual {
  double value = 0.0;
  double scale = 0.0;
  double err = 0.0;
  double relative() const;
};

/// B_f(a,b) - B_f(a+1,b) - B_f(a,b+1); zero for f meeting the
/// endpoint-vanishing hypotheses (any bounded f when a,b > 0).
Residual residual_beta_recurrence(const FuncSpec& f, double alpha, double beta,
                                  const QuadConfig& cfg = {});

/// The two derivative forms of the beta recurrence:
///   integral f'(x) x^a (1-x)^b dx = -a B_f(a,b+1) + b B_f(a+1,b)
///                                 = (a+b) B_f(a+1,b) - a B_f(a,b).
/// Returns both residuals.
std::pair<Residual, Residual> residual_beta_derivative_forms(
    const FuncSpec& f, const FuncSpec& fprime, double alpha, double beta,
    const QuadConfig& cfg = {});

/// Gamma2d sum rule: G(a+1,b;c) + G(a,b+1;c) - G(a,b;c+1), and the f'
/// form b*G(a+1,b;c+1) - a*G(a,b+1;c+1) - G_{f'}(a+1,b+1;c). The second
/// residual requires fprime.
std::pair<Residual, Residual> residual_gamma2d_recurrence(
    const FuncSpec& f, const FuncSpec& g, const Params& p,
    const std::optional<FuncSpec>& fprime, const QuadConfig& cfg = {});

/// Gamma_g(S)/Gamma_g(S+1) - G(a,b;c)/G(a,b;c+1) with S = a+b+c; the 2D
/// values are taken on the direct route so the check has content.
Residual residual_ratio_property(const FuncSpec& f, const FuncSpec& g,
                                 const Params& p, const QuadConfig& cfg = {});

/// G(a,b;c+1) - (a+b+c) G(a,b;c) - G_{f,g'}(a,b;c+1).
Residual residual_gprime_recurrence(const FuncSpec& f, const FuncSpec& g,
                                    const FuncSpec& gprime, const Params& p,
                                    const QuadConfig& cfg = {});

/// G_f(a,b;c) - G_{f(1-.)}(b,a;c), the mirrored-argument symmetry.
Residual residual_symmetry(const FuncSpec& f, const FuncSpec& g,
                           const Params& p, const QuadConfig& cfg = {});

/// f(1-u) as a FuncSpec, for the symmetry checks.
FuncSpec mirrored(const FuncSpec& f);

}  // namespace g2g
