#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace g2g {

/// Which evaluation route produced a result.
enum class Path { quad1d, direct2d, factorized, closed_form, series };

const char* to_string(Path path);

/// Tolerances and limits shared by all quadrature engines.
///
/// rel_tol / abs_tol control the level-refinement exit test
/// err <= max(rel_tol*|value|, abs_tol); trunc_eps controls where the
/// node sweep on semi-infinite domains is cut off relative to the
/// accumulated integrand mass.
struct QuadConfig {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_levels = 12;
  double trunc_eps = 1e-12;

  void validate() const;  // throws DomainError on a bad field

  QuadConfig with_rel_tol(double r) const {
    QuadConfig c = *this;
    c.rel_tol = r;
    return c;
  }
  QuadConfig with_abs_tol(double a) const {
    QuadConfig c = *this;
    c.abs_tol = a;
    return c;
  }
  QuadConfig with_max_levels(int m) const {
    QuadConfig c = *this;
    c.max_levels = m;
    return c;
  }
};

struct EvalResult {
  double value = 0.0;
  double err_est = 0.0;
  std::int64_t n_evals = 0;
  std::optional<double> truncation_point;
  Path path = Path::quad1d;
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Refinement hit max_levels with the error estimate still above
/// tolerance. Carries the best result obtained so far.
class NonConvergent : public std::runtime_error {
 public:
  NonConvergent(const std::string& msg, EvalResult partial)
      : std::runtime_error(msg), partial_(partial) {}
  const EvalResult& partial() const { return partial_; }

 private:
  EvalResult partial_;
};

/// Direct and factorized evaluations disagree far beyond their combined
/// error estimates; the integrand violates the factorization hypotheses.
class Inconsistent : public std::runtime_error {
 public:
  Inconsistent(const std::string& msg, double direct, double factorized)
      : std::runtime_error(msg), direct_(direct), factorized_(factorized) {}
  double direct_value() const { return direct_; }
  double factorized_value() const { return factorized_; }

 private:
  double direct_;
  double factorized_;
};

class OscillationCap : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivisionByZero : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integrand over (0,1). Receives both x and 1-x; the second argument is
/// computed directly from the node transform and stays accurate when x
/// rounds to 1, so factors like log(1-x) can be formed without loss.
using Integrand01 = std::function<double(double x, double one_minus_x)>;

/// Integrand over (0,inf).
using IntegrandR = std::function<double(double r)>;

/// Two-variable integrand over the open quadrant, argument order (y, x).
using Integrand2 = std::function<double(double y, double x)>;

/// Iteration order for the quadrant engine: which variable of the
/// (u, s) = (y/(x+y), x+y) coordinates runs in the outer loop.
enum class QuadrantOrder { u_outer, s_outer };

/// integral_0^1 h(x) x^(alpha-1) (1-x)^(beta-1) dx.
///
/// Double-exponential (tanh-sinh) nodes; the algebraic weight is applied
/// in log space by the engine, so h is only sampled strictly inside (0,1)
/// and alpha, beta below 1 need no special casing.
EvalResult integrate_01_weighted(const Integrand01& h, double alpha, double beta,
                                 const QuadConfig& cfg = {});

/// integral_0^inf h(x) x^(s-1) e^(-x) dx.
///
/// Exp-sinh nodes scaled to the weight's peak; the sweep is truncated
/// once node terms fall below trunc_eps of the accumulated mass, and the
/// largest abscissa used is reported as truncation_point.
EvalResult integrate_0inf_weighted(const IntegrandR& h, double s,
                                   const QuadConfig& cfg = {});

/// integral over {x>=0, y>=0} of
///   omega(y,x) y^(nu-1) x^(om-1) (x+y)^lam e^(-x-y) dy dx
/// via the substitution y = s*u, x = s*(1-u) and the two 1D engines as an
/// iterated tensor scheme.
EvalResult integrate_quadrant(const Integrand2& omega, double nu, double om,
                              double lam, const QuadConfig& cfg = {},
                              QuadrantOrder order = QuadrantOrder::u_outer);

}  // namespace g2g
