#include "g2g/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "g2g/genspecial.hpp"

namespace g2g {

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double median_ms(Fn&& fn, int warmup, int repeats, double* value_out) {
  for (int i = 0; i < warmup; ++i) *value_out = fn();
  std::vector<double> times(static_cast<std::size_t>(repeats));
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = Clock::now();
    *value_out = fn();
    const auto t1 = Clock::now();
    times[static_cast<std::size_t>(i)] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
  }
  std::sort(times.begin(), times.end());
  const std::size_t n = times.size();
  return n % 2 ? times[n / 2] : 0.5 * (times[n / 2 - 1] + times[n / 2]);
}

}  // namespace

std::vector<Params> default_bench_grid() {
  return {Params(1.0, 1.0, 0.0), Params(1.7, 1.0, 1.0), Params(1.0, 1.7, 0.0),
          Params(1.7, 1.7, 1.0)};
}

std::vector<BenchCell> run_bench(const BenchOptions& opt) {
  if (opt.warmup < 0 || opt.repeats < 1)
    throw DomainError("bench: warmup must be >= 0 and repeats >= 1");
  const std::vector<CorpusEntry>& corpus =
      opt.corpus.empty() ? default_corpus() : opt.corpus;
  const std::vector<Params> grid =
      opt.grid.empty() ? default_bench_grid() : opt.grid;

  struct CellRef {
    const CorpusEntry* entry;
    const Params* params;
  };
  std::vector<CellRef> cells;
  for (const CorpusEntry& e : corpus)
    for (const Params& p : grid) cells.push_back({&e, &p});
  if (opt.seed != 0) {
    std::mt19937_64 rng(opt.seed);
    std::shuffle(cells.begin(), cells.end(), rng);
  }

  std::vector<BenchCell> out;
  out.reserve(cells.size());
  for (const CellRef& c : cells) {
    BenchCell cell;
    cell.corpus_name = c.entry->name;
    cell.alpha = c.params->alpha;
    cell.beta = c.params->beta;
    cell.gamma = c.params->gamma;
    cell.direct_ms = median_ms(
        [&] {
          return gamma2d(c.entry->f, c.entry->g, *c.params, opt.cfg,
                         Gamma2dMode::direct)
              .value;
        },
        opt.warmup, opt.repeats, &cell.direct_value);
    cell.factorized_ms = median_ms(
        [&] {
          return gamma2d(c.entry->f, c.entry->g, *c.params, opt.cfg,
                         Gamma2dMode::factorized)
              .value;
        },
        opt.warmup, opt.repeats, &cell.factorized_value);
    cell.speedup = cell.direct_ms / std::max(cell.factorized_ms, 1e-9);
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace g2g
