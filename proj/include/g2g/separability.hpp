#pragma once

#include <optional>

#include "g2g/funcspec.hpp"

namespace g2g {

enum class Certification { separable, not_separable, inconclusive };

const char* to_string(Certification c);

struct SeparabilityReport {
  Certification certification = Certification::inconclusive;
  bool separable = false;
  std::optional<FuncSpec> f_extracted;
  std::optional<FuncSpec> g_extracted;
  double max_residual = 0.0;
  int probes = 0;
};

/// Decides whether Omega(y,x), rewritten in the coordinates
/// u = y/(x+y), s = x+y, factorizes as f(u) * g(s).
///
/// Probes a grid of Chebyshev-spaced u in (0,1) times log-spaced s in
/// [0.1, 20] and tests the cross-ratio
///   Omega(u1,s1) Omega(u2,s2) - Omega(u1,s2) Omega(u2,s1)
/// against tol for every probe pair, each normalized by its own product
/// magnitudes. A kernel vanishing at a probe makes the test inconclusive
/// (reported as not certified, never as false).
///
/// On success, f(u) := Omega(u, s0) and g(s) := Omega(u0, s)/Omega(u0, s0)
/// are returned as numeric evaluators; the anchor defaults to
/// (u0, s0) = (1/2, 1) and the f/g normalization split is arbitrary.
SeparabilityReport detect_separable(const FuncSpec& omega, double tol = 1e-9,
                                    int grid = 12, double anchor_u = 0.5,
                                    double anchor_s = 1.0);

}  // namespace g2g
