#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "g2g/corpus.hpp"
#include "g2g/quadrature.hpp"

namespace g2g {

struct BenchCell {
  std::string corpus_name;
  double alpha, beta, gamma;
  double direct_ms;      // median over repeats
  double factorized_ms;  // median over repeats
  double speedup;        // direct / factorized
  double direct_value;
  double factorized_value;
};

struct BenchOptions {
  QuadConfig cfg{};
  int warmup = 3;
  int repeats = 10;
  std::vector<CorpusEntry> corpus;  // empty: default corpus
  std::vector<Params> grid;         // empty: the default 4-cell grid
  std::uint64_t seed = 0;           // nonzero: shuffle cell order
};

/// Times the direct2d and factorized routes at matched tolerance across
/// corpus x grid cells and reports median wall times and speedups.
std::vector<BenchCell> run_bench(const BenchOptions& opt);

std::vector<Params> default_bench_grid();

}  // namespace g2g
