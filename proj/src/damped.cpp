#include "g2g/damped.hpp"

#include <cmath>
#include <limits>

namespace g2g {

namespace {

constexpr double kDirectOscillationCap = 8.0;

void check_damp(double s, double a) {
  if (!(s > 0.0)) throw DomainError("damped: s must be > 0");
  if (!(a > 0.0)) throw DomainError("damped: a must be > 0");
}

// atan2(b, a) keeps the branch right for b < 0; a > 0 guarantees it
// coincides with arctan(b/a).
double laplace_trig(double s, double a, double b, TrigKind kind) {
  check_damp(s, a);
  const double phase = s * std::atan2(b, a);
  const double mag = std::exp(std::lgamma(s) - s * std::log(std::hypot(a, b)));
  return mag * (kind == TrigKind::cos ? std::cos(phase) : std::sin(phase));
}

}  // namespace

DampParams::DampParams(double a_, double b_, double s_) : a(a_), b(b_), s(s_) {
  check_damp(s, a);
}

double laplace_cos_1d(double s, double a, double b) {
  return laplace_trig(s, a, b, TrigKind::cos);
}

double laplace_sin_1d(double s, double a, double b) {
  if (b == 0.0) {
    check_damp(s, a);
    return 0.0;
  }
  return laplace_trig(s, a, b, TrigKind::sin);
}

EvalResult gamma2d_damped(const FuncSpec& f, const std::optional<FuncSpec>& g,
                          const Params& p, double a, double b, TrigKind kind,
                          DampedMode mode, const QuadConfig& cfg) {
  const double s = p.exponent_sum();
  check_damp(s, a);
  const bool g_is_one = !g || g->is_one();

  if (mode == DampedMode::direct) {
    if (std::abs(b) > kDirectOscillationCap)
      throw OscillationCap(
          "gamma2d_damped: |b| above the direct-quadrature cap of 8; use the "
          "reduced path");
    // Natural magnitude of the problem (the b = 0 value with g ~ 1) as an
    // absolute floor: the oscillatory integral itself may be near zero.
    const double scale0 = std::exp(std::lgamma(s) - s * std::log(a) +
                                   std::lgamma(p.alpha) + std::lgamma(p.beta) -
                                   std::lgamma(p.alpha + p.beta));
    QuadConfig c = cfg;
    c.abs_tol = std::max(cfg.abs_tol, cfg.rel_tol * scale0);

    Integrand2 kernel = [&](double y, double x) -> double {
      const double sv = x + y;
      double v = f.eval1(y / sv) * std::exp((1.0 - a) * sv);
      if (!g_is_one) v *= g->eval1(sv);
      v *= kind == TrigKind::cos ? std::cos(b * sv) : std::sin(b * sv);
      return v;
    };
    return integrate_quadrant(kernel, p.alpha, p.beta, p.gamma, c);
  }

  // Reduced path: B_f times the 1D damped integral (closed form for g = 1).
  const EvalResult bf = beta_f(f, p.alpha, p.beta, cfg);
  if (g_is_one) {
    const double lv = laplace_trig(s, a, b, kind);
    EvalResult r;
    r.value = bf.value * lv;
    r.err_est = std::abs(lv) * bf.err_est +
                std::abs(bf.value) * 4.0 *
                    std::numeric_limits<double>::epsilon() * std::abs(lv);
    r.n_evals = bf.n_evals + 1;
    r.path = Path::closed_form;
    return r;
  }

  const double scale1 = std::exp(std::lgamma(s) - s * std::log(a));
  QuadConfig c1 = cfg;
  c1.abs_tol = std::max(cfg.abs_tol, cfg.rel_tol * scale1);
  const EvalResult gi = integrate_0inf_weighted(
      [&](double r) {
        const double trig =
            kind == TrigKind::cos ? std::cos(b * r) : std::sin(b * r);
        return g->eval1(r) * std::exp((1.0 - a) * r) * trig;
      },
      s, c1);

  EvalResult r;
  r.value = bf.value * gi.value;
  r.err_est = std::abs(bf.value) * gi.err_est + std::abs(gi.value) * bf.err_est +
              bf.err_est * gi.err_est;
  r.n_evals = bf.n_evals + gi.n_evals;
  r.truncation_point = gi.truncation_point;
  r.path = Path::factorized;
  return r;
}

}  // namespace g2g
