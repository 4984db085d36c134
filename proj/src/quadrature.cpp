#include "g2g/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace g2g {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// Hard sweep caps. Beyond |t|=6.1 the tanh-sinh map's 1-x underflows to a
// pure zero; beyond |t|=6.8 the exp-sinh abscissa overflows a double.
constexpr double kTMax01 = 6.1;
constexpr double kTMaxInf = 6.8;
constexpr double kH0 = 1.0;

// log(sigmoid(a)) without overflow for any a.
inline double log_sigmoid(double a) {
  return a <= 0.0 ? a - std::log1p(std::exp(a)) : -std::log1p(std::exp(-a));
}

inline double sigmoid(double a) {
  if (a >= 0.0) return 1.0 / (1.0 + std::exp(-a));
  const double e = std::exp(a);
  return e / (1.0 + e);
}

struct CoreResult {
  double value = 0.0;
  double err_est = 0.0;
  double abs_value = 0.0;  // integral of |term|; scale reference for errors
  std::int64_t n_evals = 0;
  bool converged = false;
  bool tail_growth = false;  // integrand magnitude defeated the envelope
};

// Sentinel thrown by a term when the integrand overflows where the
// weight has already decayed to nothing; converted to NonConvergent by
// the driver so the caller still gets the partial result.
struct TailGrowth {};

// Trapezoidal level-doubling driver over t = k*h. Term(t) must return the
// full node term (integrand * weight * Jacobian) and throw EvalError on a
// non-finite integrand value.
//
// Each directional sweep stops only after three consecutive terms fall
// below trunc_eps of the accumulated |term| mass, past any extent where
// significant terms were previously found, and (at level 0) past the
// caller's floor. Three consecutive nodes make isolated zero crossings of
// oscillatory integrands unable to fake a decayed tail.
template <class Term>
CoreResult refine_trapezoid(Term&& term, double t_cap, double t_floor_hi,
                            const QuadConfig& cfg) {
  const double cutoff_rel = std::min(cfg.trunc_eps, cfg.rel_tol * 1e-4);

  CoreResult out;
  double sum = 0.0;       // raw node-term sum at the current level spacing
  double abs_mass = 0.0;  // |term| sum over every node seen so far
  double value_prev = 0.0;
  double reach[2] = {0.0, 0.0};  // extent of significant terms, per direction

  for (int level = 0; level < cfg.max_levels; ++level) {
    const double h = kH0 / static_cast<double>(1 << level);
    double new_sum = 0.0;

    try {
      if (level == 0) {
        const double v0 = term(0.0);
        ++out.n_evals;
        new_sum += v0;
        abs_mass += std::abs(v0);
      }

      for (int dir = 0; dir < 2; ++dir) {
        const double sign = dir == 0 ? 1.0 : -1.0;
        const double floor_t = (level == 0 && dir == 0) ? t_floor_hi : 0.0;
        const std::int64_t stride = level == 0 ? 1 : 2;
        int below = 0;
        for (std::int64_t k = 1;; k += stride) {
          const double ta = static_cast<double>(k) * h;
          if (ta > t_cap) break;
          const double v = term(sign * ta);
          ++out.n_evals;
          new_sum += v;
          abs_mass += std::abs(v);
          const double cutoff = cutoff_rel * (abs_mass + kTiny);
          if (std::abs(v) > cutoff) {
            below = 0;
            reach[dir] = std::max(reach[dir], ta);
          } else if (++below >= 3 && ta >= reach[dir] && ta >= floor_t) {
            break;
          }
        }
      }
    } catch (const TailGrowth&) {
      out.tail_growth = true;
      out.abs_value = h * abs_mass;
      out.err_est = std::max({out.err_est, out.abs_value, kTiny});
      return out;  // partial state from the last complete level
    }

    sum += new_sum;  // previous levels' nodes are the even multiples of h
    const double value = h * sum;
    out.abs_value = h * abs_mass;
    out.value = value;

    if (level >= 2) {
      const double diff = std::abs(value - value_prev);
      // Successive-difference bound, floored at the rounding level and
      // smoothed against ulp noise once refinement stops helping.
      out.err_est =
          std::max(std::min(diff, out.err_est), 2.0 * kEps * std::abs(value));
      // The relative target is taken against the integrand mass when the
      // signed result cancels to (near) zero; a pure relative test can
      // never be met by an integral that is exactly zero.
      const double scale = std::max(std::abs(value), 0.01 * out.abs_value);
      if (out.err_est <= std::max(cfg.rel_tol * scale, cfg.abs_tol)) {
        out.converged = true;
        return out;
      }
    } else {
      out.err_est = std::abs(value);
    }
    value_prev = value;
  }
  return out;  // not converged; caller reports
}

[[noreturn]] void throw_nonconvergent(const char* what, const CoreResult& core,
                                      std::optional<double> trunc, Path path) {
  EvalResult partial;
  partial.value = core.value;
  partial.err_est = core.err_est;
  partial.n_evals = std::max<std::int64_t>(core.n_evals, 1);
  partial.truncation_point = trunc;
  partial.path = path;
  throw NonConvergent(what, partial);
}

CoreResult core_01(const Integrand01& h, double alpha, double beta,
                   const QuadConfig& cfg) {
  auto term = [&](double t) -> double {
    const double a = kPi * std::sinh(t);
    const double x = sigmoid(a);
    const double one_minus_x = sigmoid(-a);
    const double hv = h(x, one_minus_x);
    if (!std::isfinite(hv))
      throw EvalError("integrand returned a non-finite value at x=" +
                      std::to_string(x));
    // x^(alpha-1)(1-x)^(beta-1) dx/dt collapses to
    // exp(alpha*log(x) + beta*log(1-x)) * pi * cosh(t).
    const double lw = alpha * log_sigmoid(a) + beta * log_sigmoid(-a);
    return hv * std::exp(lw) * kPi * std::cosh(t);
  };
  return refine_trapezoid(term, kTMax01, 0.0, cfg);
}

struct InfResult {
  CoreResult core;
  double truncation_point = 0.0;
};

InfResult core_0inf(const IntegrandR& h, double s, const QuadConfig& cfg) {
  // Scale the nodes to the weight's peak at x = s-1 so large s stays cheap.
  const double scale = std::max(1.0, s - 1.0);
  const double log_scale = std::log(scale);

  // Initial truncation guess; the level-0 sweep covers it even if terms
  // look negligible sooner, and extends past it while terms persist.
  const double r0 =
      std::max(40.0, s + 20.0 * std::sqrt(s) + std::log(1.0 / cfg.trunc_eps));
  const double t_floor = std::min(
      kTMaxInf, std::asinh(std::max(1.0, std::log(r0 / scale)) * 2.0 / kPi));

  double max_x = 0.0;
  auto term = [&](double t) -> double {
    const double b = 0.5 * kPi * std::sinh(t);
    const double log_x = log_scale + b;
    if (log_x > 705.0) return 0.0;  // abscissa beyond double range
    const double x = std::exp(log_x);
    const double w = std::exp(s * log_x - x);
    if (w == 0.0) return 0.0;  // weight underflow; do not sample h
    const double hv = h(x);
    if (!std::isfinite(hv)) {
      // Overflow where the weight has already died means the integrand's
      // growth defeats the envelope, not that h is broken at an interior
      // point: surface it as a convergence failure.
      if (w <= 1e-250) throw TailGrowth{};
      throw EvalError("integrand returned a non-finite value at x=" +
                      std::to_string(x));
    }
    const double v = hv * w * 0.5 * kPi * std::cosh(t);
    if (v != 0.0 && x > max_x) max_x = x;
    return v;
  };

  InfResult out;
  out.core = refine_trapezoid(term, kTMaxInf, t_floor, cfg);
  out.truncation_point = max_x;
  return out;
}

}  // namespace

const char* to_string(Path path) {
  switch (path) {
    case Path::quad1d: return "quad1d";
    case Path::direct2d: return "direct2d";
    case Path::factorized: return "factorized";
    case Path::closed_form: return "closed_form";
    case Path::series: return "series";
  }
  return "unknown";
}

void QuadConfig::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("QuadConfig: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw DomainError("QuadConfig: abs_tol must be >= 0");
  if (!(trunc_eps > 0.0)) throw DomainError("QuadConfig: trunc_eps must be > 0");
  if (max_levels < 1 || max_levels > 20)
    throw DomainError("QuadConfig: max_levels must be in [1, 20]");
}

EvalResult integrate_01_weighted(const Integrand01& h, double alpha, double beta,
                                 const QuadConfig& cfg) {
  cfg.validate();
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw DomainError("integrate_01_weighted: alpha and beta must be > 0");

  const CoreResult core = core_01(h, alpha, beta, cfg);
  if (!core.converged)
    throw_nonconvergent("integrate_01_weighted: max_levels reached with error "
                        "estimate above tolerance",
                        core, std::nullopt, Path::quad1d);
  EvalResult r;
  r.value = core.value;
  r.err_est = core.err_est;
  r.n_evals = std::max<std::int64_t>(core.n_evals, 1);
  r.path = Path::quad1d;
  return r;
}

EvalResult integrate_0inf_weighted(const IntegrandR& h, double s,
                                   const QuadConfig& cfg) {
  cfg.validate();
  if (!(s > 0.0)) throw DomainError("integrate_0inf_weighted: s must be > 0");
  if (s > 170.0)
    throw DomainError("integrate_0inf_weighted: s too large for double range");

  const InfResult inf = core_0inf(h, s, cfg);
  if (!inf.core.converged)
    throw_nonconvergent(
        inf.core.tail_growth
            ? "integrate_0inf_weighted: integrand still growing at the "
              "truncation boundary (growth precondition violated)"
            : "integrate_0inf_weighted: max_levels reached with error "
              "estimate above tolerance",
        inf.core, inf.truncation_point, Path::quad1d);
  EvalResult r;
  r.value = inf.core.value;
  r.err_est = inf.core.err_est;
  r.n_evals = std::max<std::int64_t>(inf.core.n_evals, 1);
  r.truncation_point = inf.truncation_point;
  r.path = Path::quad1d;
  return r;
}

EvalResult integrate_quadrant(const Integrand2& omega, double nu, double om,
                              double lam, const QuadConfig& cfg,
                              QuadrantOrder order) {
  cfg.validate();
  if (!(nu > 0.0) || !(om > 0.0))
    throw DomainError("integrate_quadrant: nu and omega must be > 0");
  if (!(lam >= 0.0)) throw DomainError("integrate_quadrant: lambda must be >= 0");

  const double p = nu + om + lam;
  QuadConfig half = cfg;
  half.rel_tol = 0.5 * cfg.rel_tol;

  std::int64_t inner_evals = 0;
  double max_inner_err = 0.0;
  double max_trunc = 0.0;
  // Peak |inner| seen so far. Inner integrals in the far tails of the
  // outer sweep are negligible against this scale; flooring their
  // absolute tolerance by it keeps rounding noise in the 2D kernel from
  // stalling a refinement that cannot matter.
  double inner_peak = 0.0;

  const auto inner_cfg = [&]() {
    QuadConfig c = half;
    c.abs_tol = std::max(half.abs_tol, half.rel_tol * 0.01 * inner_peak);
    return c;
  };
  const auto track_inner = [&](double value, double err) {
    inner_peak = std::max(inner_peak, std::abs(value));
    max_inner_err = std::max(
        err / std::max(std::abs(value), 0.01 * inner_peak + kTiny),
        max_inner_err);
  };

  CoreResult outer;
  std::optional<double> trunc;

  // The scaled coordinates y = s*u, x = s*(1-u) can underflow to an exact
  // zero at the far probe nodes even though both factors are positive;
  // clamping to the smallest normal keeps the kernel on the open quadrant.
  constexpr double kMinNormal = std::numeric_limits<double>::min();
  const auto clamp_pos = [](double v) { return v > 0.0 ? v : kMinNormal; };

  if (order == QuadrantOrder::u_outer) {
    Integrand01 h_outer = [&](double u, double one_minus_u) -> double {
      IntegrandR h_inner = [&](double sv) -> double {
        return omega(clamp_pos(sv * u), clamp_pos(sv * one_minus_u));
      };
      const InfResult inner = core_0inf(h_inner, p, inner_cfg());
      inner_evals += inner.core.n_evals;
      if (!inner.core.converged)
        throw_nonconvergent("integrate_quadrant: inner integral over s did "
                            "not converge",
                            inner.core, inner.truncation_point, Path::direct2d);
      max_trunc = std::max(max_trunc, inner.truncation_point);
      track_inner(inner.core.value, inner.core.err_est);
      return inner.core.value;
    };
    outer = core_01(h_outer, nu, om, half);
    if (max_trunc > 0.0) trunc = max_trunc;
  } else {
    IntegrandR h_outer = [&](double sv) -> double {
      Integrand01 h_inner = [&](double u, double one_minus_u) -> double {
        return omega(sv * u, sv * one_minus_u);
      };
      const CoreResult inner = core_01(h_inner, nu, om, inner_cfg());
      inner_evals += inner.n_evals;
      if (!inner.converged)
        throw_nonconvergent("integrate_quadrant: inner integral over u did "
                            "not converge",
                            inner, std::nullopt, Path::direct2d);
      track_inner(inner.value, inner.err_est);
      return inner.value;
    };
    const InfResult oinf = core_0inf(h_outer, p, half);
    outer = oinf.core;
    if (oinf.truncation_point > 0.0) trunc = oinf.truncation_point;
  }

  if (!outer.converged)
    throw_nonconvergent("integrate_quadrant: outer integral did not converge",
                        outer, trunc, Path::direct2d);

  EvalResult r;
  r.value = outer.value;
  // Inner errors transport through the outer weight; outer.abs_value is
  // (up to the inner values' signs) that weighted mass.
  r.err_est = outer.err_est + 2.0 * max_inner_err * outer.abs_value +
              cfg.abs_tol;
  r.n_evals = inner_evals + std::max<std::int64_t>(outer.n_evals, 1);
  r.truncation_point = trunc;
  r.path = Path::direct2d;
  return r;
}

}  // namespace g2g
