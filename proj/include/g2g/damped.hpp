#pragma once

#include <optional>

#include "g2g/genspecial.hpp"

namespace g2g {

/// Damping parameters: e^(-a r) cos(b r) / sin(b r) with a > 0 strictly;
/// s is the power exponent (alpha+beta+gamma in the reduced forms).
struct DampParams {
  double a;
  double b;
  double s;
  DampParams(double a_, double b_, double s_);
};

enum class TrigKind { cos, sin };
enum class DampedMode { direct, reduced };

/// integral_0^inf r^(s-1) e^(-a r) cos(b r) dr
///   = Gamma(s) (a^2+b^2)^(-s/2) cos(s * atan2(b, a)), closed form.
double laplace_cos_1d(double s, double a, double b);

/// Same with sin; exactly zero at b = 0.
double laplace_sin_1d(double s, double a, double b);

/// Quadrant integral of
///   f(y/(x+y)) [g(x+y)] y^(alpha-1) x^(beta-1) (x+y)^gamma
///     e^(-a(x+y)) trig(b(x+y)).
/// reduced: B_f(alpha,beta) times the closed form (g absent or constant
/// one) or the 1D integral with g folded in. direct: plain 2D quadrature,
/// capped at |b| <= 8.
EvalResult gamma2d_damped(const FuncSpec& f, const std::optional<FuncSpec>& g,
                          const Params& p, double a, double b, TrigKind kind,
                          DampedMode mode, const QuadConfig& cfg = {});

}  // namespace g2g
