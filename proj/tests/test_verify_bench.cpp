#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "g2g/bench.hpp"
#include "g2g/verify.hpp"

using namespace g2g;

TEST_CASE("default identity suite passes") {
  VerifyOptions opt;
  const auto checks = run_verify(opt);
  CHECK(checks.size() > 50);
  int fails = 0;
  for (const auto& c : checks) {
    INFO(c.equation << " " << c.name << " residual=" << c.residual);
    CHECK(c.status != CheckResult::Status::fail);
    if (c.status == CheckResult::Status::fail) ++fails;
  }
  CHECK(all_passed(checks));
  CHECK(fails == 0);
}

TEST_CASE("equation filter narrows the suite") {
  VerifyOptions opt;
  opt.only = "eq12";
  const auto checks = run_verify(opt);
  CHECK(checks.size() == default_corpus().size());
  for (const auto& c : checks) CHECK(c.equation == "eq12");
}

TEST_CASE("inadmissible corpus entry reports skipped, not failed") {
  VerifyOptions opt;
  opt.only = "eq21";
  CorpusEntry bad{"inverse", FuncSpec::from_text("1/u"), FuncSpec::one(),
                  std::nullopt, std::nullopt, /*lemma_admissible=*/false};
  opt.corpus = {bad};
  const auto checks = run_verify(opt);
  REQUIRE(checks.size() == 1);
  CHECK(checks[0].status == CheckResult::Status::skipped);
  CHECK(all_passed(checks));
}

TEST_CASE("corpus file loading round-trips") {
  const char* path = "corpus_test_tmp.json";
  {
    std::ofstream f(path);
    f << R"json([{"name":"poly","f":"u^2","g":"exp(-r)","fprime":"2*u",
             "gprime":"-exp(-r)","admissible":true}])json";
  }
  const auto corpus = load_corpus_file(path);
  REQUIRE(corpus.size() == 1);
  CHECK(corpus[0].name == "poly");
  CHECK(corpus[0].f.eval1(3.0) == 9.0);
  CHECK(corpus[0].fprime.has_value());

  VerifyOptions opt;
  opt.corpus = corpus;
  opt.only = "eq21";
  const auto checks = run_verify(opt);
  CHECK(all_passed(checks));
  std::remove(path);
  CHECK_THROWS_AS(load_corpus_file("missing_file.json"), DomainError);
}

TEST_CASE("bench reports timings and speedups") {
  BenchOptions opt;
  opt.warmup = 0;
  opt.repeats = 1;
  opt.corpus = {default_corpus()[1], default_corpus()[3]};
  opt.grid = {Params(1.0, 1.0, 0.0), Params(1.7, 1.7, 1.0)};
  const auto cells = run_bench(opt);
  REQUIRE(cells.size() == 4);
  for (const auto& c : cells) {
    CHECK(c.direct_ms > 0.0);
    CHECK(c.factorized_ms > 0.0);
    CHECK(c.speedup == doctest::Approx(c.direct_ms / c.factorized_ms));
    CHECK(c.direct_value ==
          doctest::Approx(c.factorized_value).epsilon(1e-8));
  }
  CHECK_THROWS_AS(run_bench([] {
                    BenchOptions o;
                    o.repeats = 0;
                    return o;
                  }()),
                  DomainError);
}

TEST_CASE("bench cell order shuffles deterministically by seed") {
  BenchOptions opt;
  opt.warmup = 0;
  opt.repeats = 1;
  opt.corpus = {default_corpus()[0]};
  opt.grid = default_bench_grid();
  opt.seed = 99;
  const auto a = run_bench(opt);
  const auto b = run_bench(opt);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].alpha == b[i].alpha);
    CHECK(a[i].gamma == b[i].gamma);
  }
}
