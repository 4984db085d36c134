#include "g2g/logmoments.hpp"

#include <cmath>
#include <cstdint>

namespace g2g {

namespace {

// Integer power by repeated multiplication; the orders in scope are tiny.
inline double ipow(double base, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

LogMomentOrder::LogMomentOrder(int l_, int m_, int n_) : l(l_), m(m_), n(n_) {
  if (l < 0 || m < 0 || n < 0)
    throw DomainError("LogMomentOrder: orders must be >= 0");
  if (total() > 6)
    throw DomainError("LogMomentOrder: l+m+n above the practical cap of 6");
}

EvalResult gamma2d_logmoment_direct(const FuncSpec& f, const FuncSpec& g,
                                    const Params& p, const LogMomentOrder& ord,
                                    const QuadConfig& cfg) {
  if (ord.total() == 0)
    return gamma2d(f, g, p, cfg, Gamma2dMode::direct);

  // The log weights make the integrand sign-changing, so give the engine
  // an absolute floor scaled to the moment-free magnitude.
  const EvalResult m0 = gamma2d(f, g, p, cfg, Gamma2dMode::factorized);
  QuadConfig c = cfg;
  c.abs_tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(m0.value));

  Integrand2 kernel = [&](double y, double x) -> double {
    const double s = x + y;
    double v = f.eval1(y / s) * g.eval1(s);
    if (ord.l) v *= ipow(std::log(s), ord.l);
    if (ord.n) v *= ipow(std::log(x), ord.n);
    if (ord.m) v *= ipow(std::log(y), ord.m);
    return v;
  };
  EvalResult r = integrate_quadrant(kernel, p.alpha, p.beta, p.gamma, c);
  r.n_evals += m0.n_evals;
  return r;
}

EvalResult gamma_derivative(int k, double s, const QuadConfig& cfg) {
  if (k < 0) throw DomainError("gamma_derivative: order must be >= 0");
  if (k == 0)
    return integrate_0inf_weighted([](double) { return 1.0; }, s, cfg);
  QuadConfig c = cfg;
  c.abs_tol = std::max(cfg.abs_tol, cfg.rel_tol * std::exp(std::lgamma(s)));
  return integrate_0inf_weighted(
      [k](double x) { return ipow(std::log(x), k); }, s, c);
}

EvalResult beta_derivative(int pp, int q, double alpha, double beta,
                           const QuadConfig& cfg) {
  if (pp < 0 || q < 0) throw DomainError("beta_derivative: orders must be >= 0");
  if (pp == 0 && q == 0)
    return integrate_01_weighted([](double, double) { return 1.0; }, alpha,
                                 beta, cfg);
  QuadConfig c = cfg;
  c.abs_tol = std::max(
      cfg.abs_tol, cfg.rel_tol * std::exp(std::lgamma(alpha) + std::lgamma(beta) -
                                          std::lgamma(alpha + beta)));
  return integrate_01_weighted(
      [pp, q](double x, double one_minus_x) {
        double v = 1.0;
        if (pp) v = ipow(std::log(x), pp);
        if (q) v *= ipow(std::log(one_minus_x), q);
        return v;
      },
      alpha, beta, c);
}

EvalResult gamma2d_logmoment_factorized(const FuncSpec& f, const FuncSpec& g,
                                        const Params& p,
                                        const LogMomentOrder& ord,
                                        const QuadConfig& cfg) {
  if (ord.total() == 0)
    return gamma2d(f, g, p, cfg, Gamma2dMode::factorized);

  const double psum = p.exponent_sum();

  // Scale-aware floors for the sign-changing 1D factors.
  const EvalResult g0 = gamma_g(g, psum, cfg);
  const EvalResult b0 = beta_f(f, p.alpha, p.beta, cfg);
  QuadConfig cg = cfg;
  cg.abs_tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(g0.value));
  QuadConfig cb = cfg;
  cb.abs_tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(b0.value));

  const auto g_factor = [&](int k) -> EvalResult {
    if (k == 0) return g0;
    return integrate_0inf_weighted(
        [&g, k](double r) { return g.eval1(r) * ipow(std::log(r), k); }, psum,
        cg);
  };
  const auto b_factor = [&](int pw_x, int pw_1mx) -> EvalResult {
    if (pw_x == 0 && pw_1mx == 0) return b0;
    return integrate_01_weighted(
        [&f, pw_x, pw_1mx](double x, double one_minus_x) {
          double v = f.eval1(x);
          if (pw_x) v *= ipow(std::log(x), pw_x);
          if (pw_1mx) v *= ipow(std::log(one_minus_x), pw_1mx);
          return v;
        },
        p.alpha, p.beta, cb);
  };

  EvalResult out;
  out.path = Path::factorized;
  for (int i = 0; i <= ord.n; ++i) {
    for (int j = 0; j <= ord.m; ++j) {
      const double coef =
          static_cast<double>(binom(ord.n, i) * binom(ord.m, j));
      const EvalResult gf = g_factor(i + j + ord.l);
      const EvalResult bf = b_factor(ord.m - j, ord.n - i);
      out.value += coef * gf.value * bf.value;
      out.err_est += coef * (std::abs(gf.value) * bf.err_est +
                             std::abs(bf.value) * gf.err_est +
                             gf.err_est * bf.err_est);
      out.n_evals += gf.n_evals + bf.n_evals;
      if (gf.truncation_point)
        out.truncation_point = std::max(out.truncation_point.value_or(0.0),
                                        *gf.truncation_point);
    }
  }
  return out;
}

Residual classical_derivative_identity(int m, int n, double alpha, double beta,
                                       const QuadConfig& cfg) {
  if (m < 0 || n < 0 || m > 3 || n > 3)
    throw DomainError("classical_derivative_identity: m, n must be in [0, 3]");

  const EvalResult lhs_b = gamma_derivative(n, beta, cfg);
  const EvalResult lhs_a = gamma_derivative(m, alpha, cfg);
  const double lhs = lhs_b.value * lhs_a.value;
  double lhs_err = std::abs(lhs_b.value) * lhs_a.err_est +
                   std::abs(lhs_a.value) * lhs_b.err_est;

  double rhs = 0.0;
  double rhs_err = 0.0;
  double max_term = 0.0;
  for (int j = 0; j <= m; ++j) {
    for (int i = 0; i <= n; ++i) {
      const double coef = static_cast<double>(binom(m, j) * binom(n, i));
      const EvalResult gd = gamma_derivative(i + j, alpha + beta, cfg);
      const EvalResult bd = beta_derivative(m - j, n - i, alpha, beta, cfg);
      const double term = coef * gd.value * bd.value;
      rhs += term;
      rhs_err += coef * (std::abs(gd.value) * bd.err_est +
                         std::abs(bd.value) * gd.err_est);
      max_term = std::max(max_term, std::abs(term));
    }
  }

  Residual r;
  r.value = lhs - rhs;
  r.scale = std::max(std::abs(lhs), max_term);
  r.err = lhs_err + rhs_err;
  return r;
}

}  // namespace g2g
