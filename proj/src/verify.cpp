#include "g2g/verify.hpp"

#include <cmath>
#include <limits>

#include "g2g/genspecial.hpp"

namespace g2g {

namespace {

double rel_diff(double a, double b) {
  const double scale =
      std::max({std::abs(a), std::abs(b), std::numeric_limits<double>::min()});
  return std::abs(a - b) / scale;
}

struct Suite {
  const VerifyOptions& opt;
  std::vector<CheckResult> out;

  bool wanted(const char* tag) const {
    return opt.only.empty() ||
           std::string(tag).find(opt.only) != std::string::npos;
  }

  void record(const char* tag, const std::string& name, double residual,
              double tol, const std::string& note = "") {
    CheckResult c;
    c.name = name;
    c.equation = tag;
    c.residual = residual;
    c.tolerance = tol;
    c.status = residual <= tol ? CheckResult::Status::pass
                               : CheckResult::Status::fail;
    c.note = note;
    out.push_back(std::move(c));
  }

  void record_skip(const char* tag, const std::string& name,
                   const std::string& why) {
    CheckResult c;
    c.name = name;
    c.equation = tag;
    c.status = CheckResult::Status::skipped;
    c.note = why;
    out.push_back(std::move(c));
  }

  void run_entry(const CorpusEntry& e) {
    const QuadConfig& cfg = opt.cfg;

    if (wanted("eq12")) {
      const Params p(1.7, 1.0, 1.0);
      const CrossCheck cc = gamma2d_crosscheck(e.f, e.g, p, cfg);
      record("eq12", "factorization [" + e.name + "]", cc.rel_discrepancy,
             1e-8);
    }

    if (wanted("prop4")) {
      const Params p(0.9, 1.3, 0.5);
      const EvalResult polar = gamma2d_polar(e.f, e.g, p, cfg);
      const EvalResult direct = gamma2d(e.f, e.g, p, cfg, Gamma2dMode::direct);
      record("prop4", "polar path [" + e.name + "]",
             rel_diff(polar.value, direct.value), 1e-8);
    }

    if (wanted("eq10f2")) {
      const EvalResult half = beta_f_halfline(e.f, 1.7, 0.8, cfg);
      const EvalResult direct = beta_f(e.f, 1.7, 0.8, cfg);
      record("eq10f2", "half-line B_f [" + e.name + "]",
             rel_diff(half.value, direct.value), 1e-9);
    }

    if (wanted("eq21")) {
      if (!e.lemma_admissible) {
        record_skip("eq21", "beta recurrence [" + e.name + "]",
                    "inadmissible: endpoint-vanishing hypothesis fails");
      } else {
        const Residual r = residual_beta_recurrence(e.f, 1.5, 2.5, cfg);
        record("eq21", "beta recurrence [" + e.name + "]", r.relative(), 1e-8);
      }
    }

    if (wanted("eq22")) {
      if (!e.fprime || !e.lemma_admissible) {
        record_skip("eq22", "beta derivative forms [" + e.name + "]",
                    e.fprime ? "inadmissible entry" : "no f' supplied");
      } else {
        const auto [r22, r23] =
            residual_beta_derivative_forms(e.f, *e.fprime, 1.5, 2.5, cfg);
        record("eq22", "beta derivative forms [" + e.name + "]",
               std::max(r22.relative(), r23.relative()), 1e-8);
      }
    }

    if (wanted("eq24")) {
      if (!e.lemma_admissible) {
        record_skip("eq24", "gamma2d sum rule [" + e.name + "]",
                    "inadmissible entry");
      } else {
        const Params p(1.2, 0.8, 1.0);
        const auto [r24, r24b] =
            residual_gamma2d_recurrence(e.f, e.g, p, e.fprime, cfg);
        record("eq24", "gamma2d sum rule [" + e.name + "]", r24.relative(),
               1e-8);
        if (e.fprime)
          record("eq24sdr455", "gamma2d f' rule [" + e.name + "]",
                 r24b.relative(), 1e-8);
        else
          record_skip("eq24sdr455", "gamma2d f' rule [" + e.name + "]",
                      "no f' supplied");
      }
    }

    if (wanted("prop6")) {
      const Params p(1.0, 2.0, 0.5);
      const Residual r = residual_ratio_property(e.f, e.g, p, cfg);
      record("prop6", "ratio property [" + e.name + "]", r.relative(), 1e-8);
    }

    if (wanted("prop7")) {
      if (!e.gprime) {
        record_skip("prop7", "g' recurrence [" + e.name + "]",
                    "no g' supplied");
      } else {
        const Params p(1.5, 1.0, 0.5);
        const Residual r =
            residual_gprime_recurrence(e.f, e.g, *e.gprime, p, cfg);
        record("prop7", "g' recurrence [" + e.name + "]", r.relative(), 1e-8);
      }
    }

    if (wanted("remark3")) {
      const Params p(1.3, 0.7, 1.0);
      const Residual r = residual_symmetry(e.f, e.g, p, cfg);
      record("remark3", "mirrored symmetry [" + e.name + "]", r.relative(),
             1e-9);
    }
  }
};

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opt) {
  Suite suite{opt, {}};
  const std::vector<CorpusEntry>& corpus =
      opt.corpus.empty() ? default_corpus() : opt.corpus;
  for (const CorpusEntry& e : corpus) suite.run_entry(e);
  return std::move(suite.out);
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks)
    if (c.status == CheckResult::Status::fail) return false;
  return true;
}

}  // namespace g2g
