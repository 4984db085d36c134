#include "g2g/seriesrep.hpp"

#include <cmath>

namespace g2g {

namespace {

// Deterministic pairwise (tree) summation so term-parallel evaluation
// orders cannot change the result.
double pairwise_sum(const std::vector<double>& terms, std::size_t lo,
                    std::size_t hi) {
  if (hi - lo <= 4) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += terms[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

double pairwise_sum(const std::vector<double>& terms) {
  return terms.empty() ? 0.0 : pairwise_sum(terms, 0, terms.size());
}

void check_theorem9_range(double alpha, double beta) {
  if (!(alpha > 1.0) || !(beta > 1.0))
    throw DomainError(
        "series forms require alpha > 1 and beta > 1 (the stated hypothesis "
        "range)");
}

// Heuristic tail bound: last coefficient times the asymptotic factor
// Gamma(beta) (alpha+N)^(-beta), doubled.
double tail_bound(const SeriesSpec& sp, double alpha, double beta) {
  const double a_last = std::abs(sp.coeffs[sp.truncation - 1]);
  return 2.0 * a_last * std::exp(std::lgamma(beta)) *
         std::pow(alpha + sp.start + sp.truncation, -beta);
}

}  // namespace

SeriesSpec::SeriesSpec(std::vector<double> coeffs_, int start_, int truncation_)
    : coeffs(std::move(coeffs_)), start(start_), truncation(truncation_) {
  if (start < 0) throw DomainError("SeriesSpec: start index must be >= 0");
  if (truncation < 1) throw DomainError("SeriesSpec: N must be >= 1");
  if (coeffs.empty() ||
      static_cast<std::size_t>(truncation) > coeffs.size())
    throw DomainError("SeriesSpec: fewer coefficients supplied than N");
  for (double c : coeffs)
    if (!std::isfinite(c)) throw DomainError("SeriesSpec: non-finite coefficient");
}

void SeriesSpec::assert_positive() const {
  for (double c : coeffs)
    if (!(c > 0.0))
      throw DomainError("SeriesSpec: positivity hypothesis violated");
}

EvalResult beta_f_series(const SeriesSpec& sp, double alpha, double beta) {
  check_theorem9_range(alpha, beta);
  const double lg_beta = std::lgamma(beta);
  std::vector<double> terms(static_cast<std::size_t>(sp.truncation));
  for (int k = 0; k < sp.truncation; ++k) {
    const double n = static_cast<double>(sp.start + k);
    terms[static_cast<std::size_t>(k)] =
        sp.coeffs[static_cast<std::size_t>(k)] *
        std::exp(lg_beta + std::lgamma(alpha + n) -
                 std::lgamma(alpha + beta + n));
  }
  EvalResult r;
  r.value = pairwise_sum(terms);
  r.err_est = tail_bound(sp, alpha, beta);
  r.n_evals = sp.truncation;
  r.path = Path::series;
  return r;
}

EvalResult gamma2d_series(const SeriesSpec& sp, const FuncSpec& g,
                          const Params& p, const QuadConfig& cfg) {
  check_theorem9_range(p.alpha, p.beta);
  const EvalResult gg = gamma_g(g, p.exponent_sum(), cfg);
  const EvalResult bs = beta_f_series(sp, p.alpha, p.beta);
  EvalResult r;
  r.value = bs.value * gg.value;
  r.err_est = std::abs(gg.value) * bs.err_est + std::abs(bs.value) * gg.err_est;
  r.n_evals = bs.n_evals + gg.n_evals;
  r.truncation_point = gg.truncation_point;
  r.path = Path::series;
  return r;
}

EvalResult gamma2d_series_viagamma2d(const SeriesSpec& sp, const FuncSpec& g,
                                     const Params& p, const QuadConfig& cfg) {
  check_theorem9_range(p.alpha, p.beta);
  const double big_s = p.exponent_sum();
  const EvalResult prefactor = gamma_g(g, big_s, cfg);

  std::vector<double> terms(static_cast<std::size_t>(sp.truncation));
  double err = 0.0;
  std::int64_t evals = prefactor.n_evals;
  const FuncSpec one = FuncSpec::one();
  for (int k = 0; k < sp.truncation; ++k) {
    const double n = static_cast<double>(sp.start + k);
    const EvalResult g2d =
        gamma2d(one, g, Params(p.alpha + n, p.beta, p.gamma), cfg,
                Gamma2dMode::factorized);
    const EvalResult denom = gamma_g(g, big_s + n, cfg);
    const double term =
        sp.coeffs[static_cast<std::size_t>(k)] * g2d.value / denom.value;
    terms[static_cast<std::size_t>(k)] = term;
    err += std::abs(term) * (g2d.err_est / std::abs(g2d.value) +
                             denom.err_est / std::abs(denom.value));
    evals += g2d.n_evals + denom.n_evals;
  }

  const double sum = pairwise_sum(terms);
  EvalResult r;
  r.value = prefactor.value * sum;
  r.err_est = std::abs(sum) * prefactor.err_est +
              std::abs(prefactor.value) *
                  (err + tail_bound(sp, p.alpha, p.beta));
  r.n_evals = evals;
  r.path = Path::series;
  return r;
}

FuncSpec series_function(const SeriesSpec& sp) {
  return FuncSpec::from_function1("series(" + std::to_string(sp.start) + ".." +
                                      std::to_string(sp.start + sp.truncation - 1) +
                                      ")",
                                  [sp](double x) {
                                    double acc = 0.0;
                                    // Horner over the truncated polynomial.
                                    for (int k = sp.truncation - 1; k >= 0; --k)
                                      acc = acc * x +
                                            sp.coeffs[static_cast<std::size_t>(k)];
                                    return acc * std::pow(x, sp.start);
                                  });
}

}  // namespace g2g
