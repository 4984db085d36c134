#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2g/funcspec.hpp"
#include "g2g/genspecial.hpp"

namespace g2g {

/// One (f, g) pair of the identity-suite corpus, with derivatives where
/// the recurrence checks need them. lemma_admissible marks entries whose
/// endpoint behavior satisfies the recurrence hypotheses (bounded f; for
/// deliberately inadmissible entries the checks report skipped).
struct CorpusEntry {
  std::string name;
  FuncSpec f;
  FuncSpec g;
  std::optional<FuncSpec> fprime;
  std::optional<FuncSpec> gprime;
  bool lemma_admissible = true;
};

/// The built-in ten-pair corpus of smooth positive functions.
const std::vector<CorpusEntry>& default_corpus();

/// Identity-suite parameter grid: alpha, beta in {0.5, 1, 1.7, 3},
/// gamma in {0, 1, 2.5} (48 cells).
struct ParamGrid {
  std::vector<double> alphas{0.5, 1.0, 1.7, 3.0};
  std::vector<double> betas{0.5, 1.0, 1.7, 3.0};
  std::vector<double> gammas{0.0, 1.0, 2.5};
  std::vector<Params> cells() const;
};

/// Corpus override from a JSON file: a list of objects with expression
/// strings {"name", "f", "g", optional "fprime", "gprime", "admissible"}.
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

}  // namespace g2g
