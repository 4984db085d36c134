#pragma once

#include "g2g/genspecial.hpp"

namespace g2g {

/// Gauss hypergeometric F(a,b;c;z) through the Euler integral
///   [Gamma(c)/(Gamma(b)Gamma(c-b))] * B_{(1-.z)^(-a)}(b, c-b),
/// real parameters, c > b > 0, z < 1. For z in [0.95, 1) the integrand is
/// nearly singular at t = 1 and the tolerance is relaxed to 1e-6.
EvalResult hyp2f1(double a, double b, double c, double z,
                  const QuadConfig& cfg = {});

/// The same value as a quadrant integral,
///   [1/(Gamma(b)Gamma(c-b))] * integral of
///     (x+y(1-z))^(-a) (x+y)^a y^(b-1) x^(c-b-1) e^(-x-y).
EvalResult hyp2f1_gamma2d(double a, double b, double c, double z,
                          const QuadConfig& cfg = {});

/// Evaluation routes for the generalized form F_f.
enum class HypPath {
  euler_1d,       // the weighted (0,1) integral with f folded in
  gamma2d_g,      // quadrant form with general g and gamma
  gamma2d_unit_g  // quadrant form with g forced to 1, closed-form prefactor
};

/// Generalized hypergeometric
///   F_f(a,b;c;z) = [Gamma(c)/(Gamma(b)Gamma(c-b))] *
///     integral_0^1 t^(b-1) (1-t)^(c-b-1) (1-tz)^(-a) f(t) dt.
/// All three routes agree, and the value is independent of g and gamma
/// (they cancel between prefactor and integral).
EvalResult hyp2f1_f(const FuncSpec& f, double a, double b, double c, double z,
                    const FuncSpec& g, double gamma, const QuadConfig& cfg = {},
                    HypPath path = HypPath::euler_1d);

}  // namespace g2g
