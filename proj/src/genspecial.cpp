#include "g2g/genspecial.hpp"

#include <cmath>
#include <limits>

#include "g2g/separability.hpp"

namespace g2g {

namespace {

EvalResult product_result(const EvalResult& a, const EvalResult& b, Path path) {
  EvalResult r;
  r.value = a.value * b.value;
  r.err_est = std::abs(a.value) * b.err_est + std::abs(b.value) * a.err_est +
              a.err_est * b.err_est;
  r.n_evals = a.n_evals + b.n_evals;
  if (a.truncation_point || b.truncation_point)
    r.truncation_point = std::max(a.truncation_point.value_or(0.0),
                                  b.truncation_point.value_or(0.0));
  r.path = path;
  return r;
}

Integrand2 separable_kernel(const FuncSpec& f, const FuncSpec& g) {
  return [f, g](double y, double x) -> double {
    const double s = x + y;
    return f.eval1(y / s) * g.eval1(s);
  };
}

}  // namespace

Params::Params(double alpha_, double beta_, double gamma_, double a_, double b_)
    : alpha(alpha_), beta(beta_), gamma(gamma_), a(a_), b(b_) {
  if (!(alpha > 0.0)) throw DomainError("Params: alpha must be > 0");
  if (!(beta > 0.0)) throw DomainError("Params: beta must be > 0");
  if (!(gamma >= 0.0)) throw DomainError("Params: gamma must be >= 0");
  if (!(a > 0.0)) throw DomainError("Params: a must be > 0");
  if (!std::isfinite(b)) throw DomainError("Params: b must be finite");
}

double Residual::relative() const {
  return std::abs(value) / std::max(scale, std::numeric_limits<double>::min());
}

EvalResult gamma_g(const FuncSpec& g, double omega, const QuadConfig& cfg) {
  return integrate_0inf_weighted([&g](double x) { return g.eval1(x); }, omega,
                                 cfg);
}

EvalResult beta_f(const FuncSpec& f, double alpha, double beta,
                  const QuadConfig& cfg) {
  return integrate_01_weighted(
      [&f](double x, double) { return f.eval1(x); }, alpha, beta, cfg);
}

EvalResult beta_f_halfline(const FuncSpec& f, double alpha, double beta,
                           const QuadConfig& cfg) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw DomainError("beta_f_halfline: alpha and beta must be > 0");
  // y = t/(1-t); the full half-line integrand (weights and Jacobian
  // included) is formed in log space and handed to the unweighted (0,1)
  // engine.
  Integrand01 h = [&f, alpha, beta](double t, double one_minus_t) -> double {
    const double y = t / one_minus_t;
    const double arg = y / (1.0 + y);
    const double log_t = std::log(t);
    const double log_1mt = std::log(one_minus_t);
    const double log_w = (alpha - 1.0) * (log_t - log_1mt) -
                         (alpha + beta) * std::log1p(y) - 2.0 * log_1mt;
    return f.eval1(arg) * std::exp(log_w);
  };
  return integrate_01_weighted(h, 1.0, 1.0, cfg);
}

EvalResult gamma2d(const FuncSpec& f, const FuncSpec& g, const Params& p,
                   const QuadConfig& cfg, Gamma2dMode mode) {
  if (mode == Gamma2dMode::direct)
    return integrate_quadrant(separable_kernel(f, g), p.alpha, p.beta, p.gamma,
                              cfg);
  EvalResult bf = beta_f(f, p.alpha, p.beta, cfg);
  EvalResult gg = gamma_g(g, p.exponent_sum(), cfg);
  return product_result(bf, gg, Path::factorized);
}

CrossCheck gamma2d_crosscheck(const FuncSpec& f, const FuncSpec& g,
                              const Params& p, const QuadConfig& cfg) {
  CrossCheck c{gamma2d(f, g, p, cfg, Gamma2dMode::direct),
               gamma2d(f, g, p, cfg, Gamma2dMode::factorized), 0.0, 0.0};
  c.abs_discrepancy = std::abs(c.direct.value - c.factorized.value);
  const double scale =
      std::max(std::abs(c.direct.value), std::abs(c.factorized.value));
  c.rel_discrepancy =
      c.abs_discrepancy / std::max(scale, std::numeric_limits<double>::min());
  const double combined = c.direct.err_est + c.factorized.err_est;
  if (c.abs_discrepancy > 100.0 * combined)
    throw Inconsistent(
        "gamma2d: direct and factorized paths disagree beyond 100x the "
        "combined error estimate; the kernel violates the factorization "
        "hypotheses",
        c.direct.value, c.factorized.value);
  return c;
}

EvalResult gamma2d_omega(const FuncSpec& omega, const Params& p,
                         const QuadConfig& cfg, bool certify_separable) {
  if (certify_separable) {
    const SeparabilityReport rep = detect_separable(omega);
    if (rep.certification == Certification::separable) {
      EvalResult bf = beta_f(*rep.f_extracted, p.nu(), p.om(), cfg);
      EvalResult gg =
          gamma_g(*rep.g_extracted, p.nu() + p.om() + p.lam(), cfg);
      return product_result(bf, gg, Path::factorized);
    }
  }
  return integrate_quadrant(
      [&omega](double y, double x) { return omega.eval2(y, x); }, p.nu(),
      p.om(), p.lam(), cfg);
}

EvalResult gamma2d_polar(const FuncSpec& f, const FuncSpec& g, const Params& p,
                         const QuadConfig& cfg) {
  cfg.validate();
  constexpr double kHalfPi = 1.570796326794896619231321691639751442;
  const double psum = p.exponent_sum();

  QuadConfig half = cfg;
  half.rel_tol = 0.5 * cfg.rel_tol;

  std::int64_t inner_evals = 0;
  double max_inner_rel = 0.0;

  // phi = (pi/2) x; the engine's x^(alpha-1)(1-x)^(beta-1) weight is
  // corrected by the bounded ratios (sin phi / x) and (cos phi / (1-x)).
  Integrand01 h = [&](double x, double one_minus_x) -> double {
    const double sin_phi = std::sin(kHalfPi * x);
    const double cos_phi = std::sin(kHalfPi * one_minus_x);
    const double c = sin_phi + cos_phi;
    const double fv = f.eval1(sin_phi / c);

    IntegrandR h_r = [&](double r) -> double {
      return g.eval1(r * c) * std::exp(r * (1.0 - c));
    };
    const EvalResult inner = integrate_0inf_weighted(h_r, psum, half);
    inner_evals += inner.n_evals;
    max_inner_rel =
        std::max(max_inner_rel,
                 inner.err_est / std::max(std::abs(inner.value),
                                          std::numeric_limits<double>::min()));

    const double ratio_a = std::pow(sin_phi / x, p.alpha - 1.0);
    const double ratio_b = std::pow(cos_phi / one_minus_x, p.beta - 1.0);
    return fv * ratio_a * ratio_b * std::pow(c, p.gamma) * kHalfPi *
           inner.value;
  };

  EvalResult outer = integrate_01_weighted(h, p.alpha, p.beta, half);
  EvalResult r;
  r.value = outer.value;
  r.err_est = outer.err_est + 2.0 * max_inner_rel * std::abs(outer.value);
  r.n_evals = outer.n_evals + inner_evals;
  r.path = Path::direct2d;
  return r;
}

Residual residual_beta_recurrence(const FuncSpec& f, double alpha, double beta,
                                  const QuadConfig& cfg) {
  const EvalResult b0 = beta_f(f, alpha, beta, cfg);
  const EvalResult b1 = beta_f(f, alpha + 1.0, beta, cfg);
  const EvalResult b2 = beta_f(f, alpha, beta + 1.0, cfg);
  Residual r;
  r.value = b0.value - b1.value - b2.value;
  r.scale = std::max({std::abs(b0.value), std::abs(b1.value),
                      std::abs(b2.value)});
  r.err = b0.err_est + b1.err_est + b2.err_est;
  return r;
}

std::pair<Residual, Residual> residual_beta_derivative_forms(
    const FuncSpec& f, const FuncSpec& fprime, double alpha, double beta,
    const QuadConfig& cfg) {
  const EvalResult dint = beta_f(fprime, alpha + 1.0, beta + 1.0, cfg);
  const EvalResult b_ab = beta_f(f, alpha, beta, cfg);
  const EvalResult b_a1 = beta_f(f, alpha + 1.0, beta, cfg);
  const EvalResult b_b1 = beta_f(f, alpha, beta + 1.0, cfg);

  const double rhs22 = -alpha * b_b1.value + beta * b_a1.value;
  const double rhs23 = (alpha + beta) * b_a1.value - alpha * b_ab.value;

  Residual r22;
  r22.value = dint.value - rhs22;
  r22.scale = std::max({std::abs(dint.value), alpha * std::abs(b_b1.value),
                        beta * std::abs(b_a1.value)});
  r22.err = dint.err_est + alpha * b_b1.err_est + beta * b_a1.err_est;

  Residual r23;
  r23.value = dint.value - rhs23;
  r23.scale = std::max({std::abs(dint.value),
                        (alpha + beta) * std::abs(b_a1.value),
                        alpha * std::abs(b_ab.value)});
  r23.err = dint.err_est + (alpha + beta) * b_a1.err_est +
            alpha * b_ab.err_est;
  return {r22, r23};
}

std::pair<Residual, Residual> residual_gamma2d_recurrence(
    const FuncSpec& f, const FuncSpec& g, const Params& p,
    const std::optional<FuncSpec>& fprime, const QuadConfig& cfg) {
  const auto G = [&](const FuncSpec& ff, double da, double db, double dc) {
    return gamma2d(ff, g, Params(p.alpha + da, p.beta + db, p.gamma + dc), cfg,
                   Gamma2dMode::factorized);
  };

  const EvalResult ga1 = G(f, 1, 0, 0);
  const EvalResult gb1 = G(f, 0, 1, 0);
  const EvalResult gc1 = G(f, 0, 0, 1);
  Residual r24;
  r24.value = ga1.value + gb1.value - gc1.value;
  r24.scale = std::max({std::abs(ga1.value), std::abs(gb1.value),
                        std::abs(gc1.value)});
  r24.err = ga1.err_est + gb1.err_est + gc1.err_est;

  Residual r24b;
  if (fprime) {
    const EvalResult lhs1 = G(f, 1, 0, 1);
    const EvalResult lhs2 = G(f, 0, 1, 1);
    const EvalResult rhs = G(*fprime, 1, 1, 0);
    r24b.value = p.beta * lhs1.value - p.alpha * lhs2.value - rhs.value;
    r24b.scale = std::max({p.beta * std::abs(lhs1.value),
                           p.alpha * std::abs(lhs2.value),
                           std::abs(rhs.value)});
    r24b.err = p.beta * lhs1.err_est + p.alpha * lhs2.err_est + rhs.err_est;
  }
  return {r24, r24b};
}

Residual residual_ratio_property(const FuncSpec& f, const FuncSpec& g,
                                 const Params& p, const QuadConfig& cfg) {
  const double s = p.exponent_sum();
  const EvalResult g0 = gamma_g(g, s, cfg);
  const EvalResult g1 = gamma_g(g, s + 1.0, cfg);
  const EvalResult d0 = gamma2d(f, g, p, cfg, Gamma2dMode::direct);
  const EvalResult d1 = gamma2d(
      f, g, Params(p.alpha, p.beta, p.gamma + 1.0), cfg, Gamma2dMode::direct);

  if (std::abs(g1.value) <= g1.err_est || std::abs(d1.value) <= d1.err_est)
    throw DivisionByZero(
        "residual_ratio_property: a denominator is indistinguishable from "
        "zero");

  const double q1 = g0.value / g1.value;
  const double q2 = d0.value / d1.value;
  const double tiny = std::numeric_limits<double>::min();
  Residual r;
  r.value = q1 - q2;
  r.scale = std::max(std::abs(q1), std::abs(q2));
  // First-order relative-error transport for each quotient.
  r.err = std::abs(q1) * (g0.err_est / std::max(std::abs(g0.value), tiny) +
                          g1.err_est / std::abs(g1.value)) +
          std::abs(q2) * (d0.err_est / std::max(std::abs(d0.value), tiny) +
                          d1.err_est / std::abs(d1.value));
  return r;
}

Residual residual_gprime_recurrence(const FuncSpec& f, const FuncSpec& g,
                                    const FuncSpec& gprime, const Params& p,
                                    const QuadConfig& cfg) {
  const double s = p.exponent_sum();
  const EvalResult lhs =
      gamma2d(f, g, Params(p.alpha, p.beta, p.gamma + 1.0), cfg,
              Gamma2dMode::factorized);
  const EvalResult t1 = gamma2d(f, g, p, cfg, Gamma2dMode::factorized);
  const EvalResult t2 =
      gamma2d(f, gprime, Params(p.alpha, p.beta, p.gamma + 1.0), cfg,
              Gamma2dMode::factorized);
  Residual r;
  r.value = lhs.value - s * t1.value - t2.value;
  r.scale =
      std::max({std::abs(lhs.value), s * std::abs(t1.value), std::abs(t2.value)});
  r.err = lhs.err_est + s * t1.err_est + t2.err_est;
  return r;
}

FuncSpec mirrored(const FuncSpec& f) {
  return FuncSpec::from_function1(
      f.label() + " mirrored",
      [f](double u) { return f.eval1(1.0 - u); });
}

Residual residual_symmetry(const FuncSpec& f, const FuncSpec& g,
                           const Params& p, const QuadConfig& cfg) {
  const EvalResult lhs = gamma2d(f, g, p, cfg, Gamma2dMode::factorized);
  const EvalResult rhs =
      gamma2d(mirrored(f), g, Params(p.beta, p.alpha, p.gamma), cfg,
              Gamma2dMode::factorized);
  Residual r;
  r.value = lhs.value - rhs.value;
  r.scale = std::max(std::abs(lhs.value), std::abs(rhs.value));
  r.err = lhs.err_est + rhs.err_est;
  return r;
}

}  // namespace g2g
