#pragma once

#include <string>
#include <vector>

#include "g2g/corpus.hpp"
#include "g2g/quadrature.hpp"

namespace g2g {

struct CheckResult {
  enum class Status { pass, fail, skipped };
  std::string name;
  std::string equation;  // identity tag: eq12, eq21, eq24, prop6, ...
  double residual = 0.0;  // relative to the largest participating term
  double tolerance = 0.0;
  Status status = Status::pass;
  std::string note;
};

struct VerifyOptions {
  QuadConfig cfg{};
  std::vector<CorpusEntry> corpus;  // empty: use default_corpus()
  std::string only;                 // substring filter on the equation tag
};

/// Runs the identity suite over the corpus: factorization (eq12), polar
/// and half-line path equivalence, the beta/gamma2d recurrences, the
/// ratio and g' properties, and the mirrored-argument symmetry. Entries
/// not meeting an identity's hypotheses are reported skipped.
std::vector<CheckResult> run_verify(const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace g2g
