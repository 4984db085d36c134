#include "g2g/hyperg.hpp"

#include <cmath>
#include <limits>

namespace g2g {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_hyp_domain(double b, double c, double z) {
  if (!(b > 0.0)) throw DomainError("hyp2f1: b must be > 0");
  if (!(c > b)) throw DomainError("hyp2f1: c must be > b");
  if (!(z < 1.0)) throw DomainError("hyp2f1: z must be < 1");
}

QuadConfig near_one_relaxed(const QuadConfig& cfg, double z) {
  QuadConfig c = cfg;
  if (z >= 0.95) c.rel_tol = std::max(cfg.rel_tol, 1e-6);
  return c;
}

// (1 - t z)^(-a), kept in log form for accuracy near t z -> 1.
inline double euler_kernel(double t, double z, double a) {
  return std::exp(-a * std::log1p(-t * z));
}

EvalResult scaled(const EvalResult& in, double factor, Path path) {
  EvalResult r = in;
  r.value = in.value * factor;
  // The log-gamma prefactors carry a few ulp of relative error.
  r.err_est =
      std::abs(factor) * in.err_est + 8.0 * kEps * std::abs(r.value);
  r.path = path;
  return r;
}

}  // namespace

EvalResult hyp2f1(double a, double b, double c, double z,
                  const QuadConfig& cfg) {
  check_hyp_domain(b, c, z);
  const QuadConfig qc = near_one_relaxed(cfg, z);
  const double pref =
      std::exp(std::lgamma(c) - std::lgamma(b) - std::lgamma(c - b));
  const EvalResult integral = integrate_01_weighted(
      [a, z](double t, double) { return euler_kernel(t, z, a); }, b, c - b, qc);
  return scaled(integral, pref, Path::quad1d);
}

EvalResult hyp2f1_gamma2d(double a, double b, double c, double z,
                          const QuadConfig& cfg) {
  check_hyp_domain(b, c, z);
  const QuadConfig qc = near_one_relaxed(cfg, z);
  const double pref = std::exp(-std::lgamma(b) - std::lgamma(c - b));
  // For z < 1 the factor x + y(1-z) = (x+y) - y z is positive on the open
  // quadrant, so the kernel has no pole.
  Integrand2 kernel = [a, z](double y, double x) -> double {
    const double s = x + y;
    return std::pow(s / (s - y * z), a);
  };
  const EvalResult integral = integrate_quadrant(kernel, b, c - b, 0.0, qc);
  return scaled(integral, pref, Path::direct2d);
}

EvalResult hyp2f1_f(const FuncSpec& f, double a, double b, double c, double z,
                    const FuncSpec& g, double gamma, const QuadConfig& cfg,
                    HypPath path) {
  check_hyp_domain(b, c, z);
  if (!(gamma >= 0.0)) throw DomainError("hyp2f1_f: gamma must be >= 0");
  const QuadConfig qc = near_one_relaxed(cfg, z);

  switch (path) {
    case HypPath::euler_1d: {
      const double pref =
          std::exp(std::lgamma(c) - std::lgamma(b) - std::lgamma(c - b));
      const EvalResult integral = integrate_01_weighted(
          [&f, a, z](double t, double) {
            return f.eval1(t) * euler_kernel(t, z, a);
          },
          b, c - b, qc);
      return scaled(integral, pref, Path::quad1d);
    }

    case HypPath::gamma2d_g: {
      const EvalResult gg = gamma_g(g, c + gamma, qc);
      Integrand2 kernel = [&f, &g, a, z](double y, double x) -> double {
        const double s = x + y;
        return f.eval1(y / s) * g.eval1(s) * std::pow(s / (s - y * z), a);
      };
      const EvalResult integral =
          integrate_quadrant(kernel, b, c - b, gamma, qc);
      const double pref_nog =
          std::exp(std::lgamma(c) - std::lgamma(b) - std::lgamma(c - b));
      EvalResult r;
      r.value = pref_nog * integral.value / gg.value;
      r.err_est = std::abs(r.value) *
                      (integral.err_est / std::abs(integral.value) +
                       gg.err_est / std::abs(gg.value)) +
                  8.0 * kEps * std::abs(r.value);
      r.n_evals = integral.n_evals + gg.n_evals;
      r.truncation_point = integral.truncation_point;
      r.path = Path::direct2d;
      return r;
    }

    case HypPath::gamma2d_unit_g: {
      const double pref = std::exp(std::lgamma(c) - std::lgamma(b) -
                                   std::lgamma(c - b) - std::lgamma(c + gamma));
      Integrand2 kernel = [&f, a, z](double y, double x) -> double {
        const double s = x + y;
        return f.eval1(y / s) * std::pow(s / (s - y * z), a);
      };
      const EvalResult integral =
          integrate_quadrant(kernel, b, c - b, gamma, qc);
      return scaled(integral, pref, Path::direct2d);
    }
  }
  throw DomainError("hyp2f1_f: unknown path");
}

}  // namespace g2g
