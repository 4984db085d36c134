// g2g: evaluate the generalized gamma/beta family, verify its identities,
// benchmark the direct vs factorized routes, and emit JSON or table
// reports.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "g2g/bench.hpp"
#include "g2g/corpus.hpp"
#include "g2g/damped.hpp"
#include "g2g/genspecial.hpp"
#include "g2g/hyperg.hpp"
#include "g2g/oracle.hpp"
#include "g2g/separability.hpp"
#include "g2g/seriesrep.hpp"
#include "g2g/verify.hpp"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
  g2g::QuadConfig cfg;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
};

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Defaults file pointed at by G2G_DEFAULTS; flags override these values.
json load_defaults() {
  const char* path = std::getenv("G2G_DEFAULTS");
  if (!path || !*path) return json::object();
  std::ifstream in(path);
  if (!in) throw g2g::DomainError(std::string("G2G_DEFAULTS not readable: ") + path);
  json j;
  in >> j;
  return j;
}

void apply_defaults(const json& d, CommonOpts* o) {
  o->cfg.rel_tol = d.value("rel_tol", o->cfg.rel_tol);
  o->cfg.abs_tol = d.value("abs_tol", o->cfg.abs_tol);
  o->cfg.max_levels = d.value("max_levels", o->cfg.max_levels);
  o->cfg.trunc_eps = d.value("trunc_eps", o->cfg.trunc_eps);
  o->format = d.value("format", o->format);
}

json result_to_json(const g2g::EvalResult& r) {
  json j{{"value", r.value},
         {"err_est", r.err_est},
         {"n_evals", r.n_evals},
         {"path", g2g::to_string(r.path)}};
  if (r.truncation_point) j["truncation_point"] = *r.truncation_point;
  return j;
}

void emit(const json& report, const CommonOpts& o) {
  std::ostringstream text;
  if (o.format == "json") {
    text << report.dump(2) << "\n";
  } else {
    // Flat key: value rendering for humans.
    std::function<void(const json&, std::string)> walk =
        [&](const json& node, std::string prefix) {
          if (node.is_object()) {
            for (auto it = node.begin(); it != node.end(); ++it)
              walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
          } else if (node.is_array()) {
            int i = 0;
            for (const auto& item : node)
              walk(item, prefix + "[" + std::to_string(i++) + "]");
          } else {
            text << prefix << ": " << node.dump() << "\n";
          }
        };
    walk(report, "");
  }
  if (o.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw g2g::DomainError("cannot write output file: " + o.out);
    f << text.str();
  }
}

g2g::FuncSpec parse_spec(const std::string& text, int want_arity,
                         const char* what) {
  g2g::FuncSpec fs = g2g::FuncSpec::from_text(text);
  if (!fs.is_constant() && fs.arity() != want_arity)
    throw g2g::DomainError(std::string(what) + " must be a " +
                           (want_arity == 1 ? "one" : "two") +
                           "-variable expression, got: " + text);
  return fs;
}

// Coefficient list: either "v@n,v@n,..." pairs or a plain comma list
// starting at --start.
g2g::SeriesSpec parse_coeffs(const std::string& text, int start, int n_terms) {
  std::vector<std::pair<int, double>> pairs;
  std::stringstream ss(text);
  std::string tok;
  bool with_at = text.find('@') != std::string::npos;
  int implicit_index = start;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (with_at) {
      const auto at = tok.find('@');
      if (at == std::string::npos)
        throw g2g::DomainError("coeffs: mixed pair and list syntax");
      pairs.emplace_back(std::stoi(tok.substr(at + 1)),
                         std::stod(tok.substr(0, at)));
    } else {
      pairs.emplace_back(implicit_index++, std::stod(tok));
    }
  }
  if (pairs.empty()) throw g2g::DomainError("coeffs: empty coefficient list");
  int lo = pairs.front().first, hi = pairs.front().first;
  for (const auto& [n, v] : pairs) {
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  std::vector<double> coeffs(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (const auto& [n, v] : pairs) coeffs[static_cast<std::size_t>(n - lo)] = v;
  const int n = n_terms > 0 ? n_terms : static_cast<int>(coeffs.size());
  return g2g::SeriesSpec(std::move(coeffs), lo, n);
}

int cmd_eval(const CommonOpts& o, const std::optional<std::string>& f_expr,
             const std::optional<std::string>& g_expr,
             const std::optional<std::string>& omega_expr, double alpha,
             double beta, double gamma, const std::string& mode) {
  const bool fg_given = f_expr.has_value() || g_expr.has_value();
  if (fg_given == omega_expr.has_value())
    throw g2g::DomainError(
        "eval needs exactly one of (--f and --g) or --omega");
  if (fg_given && (!f_expr || !g_expr))
    throw g2g::DomainError("eval needs both --f and --g");

  const g2g::Params p(alpha, beta, gamma);
  json rep{{"command", "eval"},
           {"params", {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}}},
           {"rel_tol", o.cfg.rel_tol}};

  std::optional<g2g::EvalResult> direct, factorized;
  json timings;

  if (fg_given) {
    const g2g::FuncSpec f = parse_spec(*f_expr, 1, "--f");
    const g2g::FuncSpec g = parse_spec(*g_expr, 1, "--g");
    rep["f"] = f.label();
    rep["g"] = g.label();
    if (mode == "direct" || mode == "both") {
      const auto t0 = Clock::now();
      direct = g2g::gamma2d(f, g, p, o.cfg, g2g::Gamma2dMode::direct);
      timings["direct_ms"] = elapsed_ms(t0);
    }
    if (mode == "factorized" || mode == "auto" || mode == "both") {
      const auto t0 = Clock::now();
      factorized = g2g::gamma2d(f, g, p, o.cfg, g2g::Gamma2dMode::factorized);
      timings["factorized_ms"] = elapsed_ms(t0);
    }
  } else {
    const g2g::FuncSpec omega = parse_spec(*omega_expr, 2, "--omega");
    rep["omega"] = omega.label();
    const g2g::SeparabilityReport sep = g2g::detect_separable(omega);
    rep["separable"] = sep.separable;
    rep["separability"] = g2g::to_string(sep.certification);
    if (mode == "direct" || mode == "both" || !sep.separable) {
      const auto t0 = Clock::now();
      direct = g2g::gamma2d_omega(omega, p, o.cfg);
      timings["direct_ms"] = elapsed_ms(t0);
    }
    if (sep.separable && mode != "direct") {
      const auto t0 = Clock::now();
      factorized = g2g::gamma2d_omega(omega, p, o.cfg, true);
      timings["factorized_ms"] = elapsed_ms(t0);
    }
  }

  if (direct) rep["direct"] = result_to_json(*direct);
  if (factorized) rep["factorized"] = result_to_json(*factorized);
  if (direct && factorized) {
    const double ad = std::abs(direct->value - factorized->value);
    const double scale = std::max(
        {std::abs(direct->value), std::abs(factorized->value), 1e-300});
    rep["abs_discrepancy"] = ad;
    rep["rel_discrepancy"] = ad / scale;
  }
  rep["value"] = factorized ? factorized->value : direct->value;
  rep["timings_ms"] = timings;
  rep["status"] = "ok";
  emit(rep, o);
  return kExitOk;
}

int cmd_verify(const CommonOpts& o, const std::string& only,
               const std::string& corpus_file) {
  g2g::VerifyOptions vo;
  vo.cfg = o.cfg;
  vo.only = only;
  if (!corpus_file.empty()) vo.corpus = g2g::load_corpus_file(corpus_file);

  const auto t0 = Clock::now();
  const std::vector<g2g::CheckResult> checks = g2g::run_verify(vo);
  const double ms = elapsed_ms(t0);

  int n_pass = 0, n_fail = 0, n_skip = 0;
  json items = json::array();
  for (const auto& c : checks) {
    const char* status = c.status == g2g::CheckResult::Status::pass ? "pass"
                         : c.status == g2g::CheckResult::Status::fail
                             ? "fail"
                             : "skipped";
    (c.status == g2g::CheckResult::Status::pass
         ? n_pass
         : c.status == g2g::CheckResult::Status::fail ? n_fail : n_skip)++;
    json item{{"name", c.name},
              {"equation", c.equation},
              {"status", status}};
    if (c.status != g2g::CheckResult::Status::skipped) {
      item["residual"] = c.residual;
      item["tolerance"] = c.tolerance;
    }
    if (!c.note.empty()) item["note"] = c.note;
    items.push_back(std::move(item));
  }
  json rep{{"command", "verify"}, {"checks", items},   {"n_pass", n_pass},
           {"n_fail", n_fail},    {"n_skip", n_skip},  {"timings_ms", ms},
           {"rel_tol", o.cfg.rel_tol}};
  emit(rep, o);
  return n_fail == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const CommonOpts& o, int warmup, int repeats) {
  g2g::BenchOptions bo;
  bo.cfg = o.cfg;
  bo.warmup = warmup;
  bo.repeats = repeats;
  bo.seed = o.seed;

  const std::vector<g2g::BenchCell> cells = g2g::run_bench(bo);
  json items = json::array();
  int faster = 0;
  for (const auto& c : cells) {
    items.push_back(json{{"f_g", c.corpus_name},
                         {"alpha", c.alpha},
                         {"beta", c.beta},
                         {"gamma", c.gamma},
                         {"direct_ms_median", c.direct_ms},
                         {"factorized_ms_median", c.factorized_ms},
                         {"speedup", c.speedup},
                         {"direct_value", c.direct_value},
                         {"factorized_value", c.factorized_value}});
    if (c.speedup > 1.0) ++faster;
  }
  json rep{{"command", "bench"},
           {"rel_tol", o.cfg.rel_tol},
           {"warmup", warmup},
           {"repeats", repeats},
           {"cells", items},
           {"n_cells", cells.size()},
           {"n_factorized_faster", faster}};
  emit(rep, o);
  return kExitOk;
}

int cmd_hyp(const CommonOpts& o, double a, double b, double c, double z,
            const std::optional<std::string>& f_expr,
            const std::optional<std::string>& g_expr, double gamma) {
  json rep{{"command", "hyp"},
           {"a", a},
           {"b", b},
           {"c", c},
           {"z", z},
           {"rel_tol", o.cfg.rel_tol}};
  json timings;
  if (!f_expr) {
    const auto t0 = Clock::now();
    const g2g::EvalResult euler = g2g::hyp2f1(a, b, c, z, o.cfg);
    timings["euler_ms"] = elapsed_ms(t0);
    const auto t1 = Clock::now();
    const g2g::EvalResult quad2d = g2g::hyp2f1_gamma2d(a, b, c, z, o.cfg);
    timings["gamma2d_ms"] = elapsed_ms(t1);
    rep["euler"] = result_to_json(euler);
    rep["gamma2d"] = result_to_json(quad2d);
    rep["value"] = euler.value;
    rep["rel_discrepancy"] =
        std::abs(euler.value - quad2d.value) /
        std::max(std::abs(euler.value), 1e-300);
  } else {
    const g2g::FuncSpec f = parse_spec(*f_expr, 1, "--f");
    const g2g::FuncSpec g = g_expr ? parse_spec(*g_expr, 1, "--g")
                                   : g2g::FuncSpec::one();
    rep["f"] = f.label();
    rep["g"] = g.label();
    rep["gamma"] = gamma;
    const g2g::EvalResult p1 =
        g2g::hyp2f1_f(f, a, b, c, z, g, gamma, o.cfg, g2g::HypPath::euler_1d);
    const g2g::EvalResult p2 =
        g2g::hyp2f1_f(f, a, b, c, z, g, gamma, o.cfg, g2g::HypPath::gamma2d_g);
    const g2g::EvalResult p3 = g2g::hyp2f1_f(f, a, b, c, z, g, gamma, o.cfg,
                                             g2g::HypPath::gamma2d_unit_g);
    rep["euler"] = result_to_json(p1);
    rep["gamma2d_g"] = result_to_json(p2);
    rep["gamma2d_unit_g"] = result_to_json(p3);
    rep["value"] = p1.value;
    rep["max_rel_path_spread"] =
        (std::max({p1.value, p2.value, p3.value}) -
         std::min({p1.value, p2.value, p3.value})) /
        std::max(std::abs(p1.value), 1e-300);
  }
  rep["timings_ms"] = timings;
  rep["status"] = "ok";
  emit(rep, o);
  return kExitOk;
}

int cmd_series(const CommonOpts& o, const std::string& coeffs, int start,
               int n_terms, double alpha, double beta, double gamma,
               const std::optional<std::string>& g_expr) {
  const g2g::SeriesSpec sp = parse_coeffs(coeffs, start, n_terms);
  json rep{{"command", "series"},
           {"alpha", alpha},
           {"beta", beta},
           {"start", sp.start},
           {"n_terms", sp.truncation}};
  const g2g::EvalResult bs = g2g::beta_f_series(sp, alpha, beta);
  rep["beta_f_series"] = result_to_json(bs);
  rep["value"] = bs.value;
  if (g_expr) {
    const g2g::FuncSpec g = parse_spec(*g_expr, 1, "--g");
    const g2g::Params p(alpha, beta, gamma);
    rep["g"] = g.label();
    rep["gamma"] = gamma;
    const g2g::EvalResult s2 = g2g::gamma2d_series(sp, g, p, o.cfg);
    const g2g::EvalResult s3 = g2g::gamma2d_series_viagamma2d(sp, g, p, o.cfg);
    rep["gamma2d_series"] = result_to_json(s2);
    rep["gamma2d_series_viagamma2d"] = result_to_json(s3);
    rep["value"] = s2.value;
  }
  rep["status"] = "ok";
  emit(rep, o);
  return kExitOk;
}

int cmd_detect(const CommonOpts& o, const std::string& omega_expr, double tol,
               int grid) {
  const g2g::FuncSpec omega = parse_spec(omega_expr, 2, "--omega");
  const g2g::SeparabilityReport sep =
      g2g::detect_separable(omega, tol, grid);
  json rep{{"command", "detect"},
           {"omega", omega.label()},
           {"tol", tol},
           {"grid", grid},
           {"separable", sep.separable},
           {"certification", g2g::to_string(sep.certification)},
           {"max_residual", sep.max_residual},
           {"probes", sep.probes}};
  if (sep.separable) {
    // Sampled values of the extracted factors, for downstream use.
    json fs = json::array(), gs = json::array();
    for (double u : {0.1, 0.3, 0.5, 0.7, 0.9})
      fs.push_back(json{{"u", u}, {"f", sep.f_extracted->eval1(u)}});
    for (double s : {0.5, 1.0, 2.0, 5.0, 10.0})
      gs.push_back(json{{"s", s}, {"g", sep.g_extracted->eval1(s)}});
    rep["f_samples"] = fs;
    rep["g_samples"] = gs;
  }
  rep["status"] = "ok";
  emit(rep, o);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized gamma/beta toolkit: quadrant integrals, their "
               "factorized forms, and the identity suite"};
  app.require_subcommand(1);

  CommonOpts common;
  try {
    apply_defaults(load_defaults(), &common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  app.add_option("--tol", common.cfg.rel_tol, "relative tolerance");
  app.add_option("--abs-tol", common.cfg.abs_tol, "absolute tolerance floor");
  app.add_option("--max-levels", common.cfg.max_levels, "refinement depth cap");
  app.add_option("--trunc-eps", common.cfg.trunc_eps, "tail cutoff threshold");
  app.add_option("--format", common.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", common.out, "write the report to a file");
  app.add_option("--seed", common.seed, "shuffle seed for bench cell order");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate the 2D integral");
  std::optional<std::string> f_expr, g_expr, omega_expr;
  double alpha = 1.0, beta = 1.0, gamma = 0.0;
  std::string mode = "both";
  eval->add_option("--f", f_expr, "f(u) expression");
  eval->add_option("--g", g_expr, "g(r) expression");
  eval->add_option("--omega", omega_expr, "Omega(y,x) expression");
  eval->add_option("--alpha,--nu", alpha, "alpha (nu)");
  eval->add_option("--beta,--omega-exp", beta, "beta (omega exponent)");
  eval->add_option("--gamma,--lambda", gamma, "gamma (lambda)");
  eval->add_option("--mode", mode, "direct, factorized, auto or both")
      ->check(CLI::IsMember({"direct", "factorized", "auto", "both"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  std::string only, corpus_file;
  verify->add_option("--only", only, "filter checks by equation tag");
  verify->add_option("--corpus", corpus_file, "corpus override JSON file");

  // bench
  auto* bench = app.add_subcommand("bench", "time direct vs factorized");
  int warmup = 3, repeats = 10;
  bench->add_option("--warmup", warmup, "warmup runs per cell");
  bench->add_option("--repeats", repeats, "timed runs per cell");

  // hyp
  auto* hyp = app.add_subcommand("hyp", "Gauss hypergeometric function");
  double ha = 1.0, hb = 1.0, hc = 2.0, hz = 0.0, hgamma = 0.0;
  std::optional<std::string> hf, hg;
  hyp->add_option("--a", ha, "a");
  hyp->add_option("--b", hb, "b");
  hyp->add_option("--c", hc, "c");
  hyp->add_option("--z", hz, "z (< 1)");
  hyp->add_option("--f", hf, "f(u) for the generalized form");
  hyp->add_option("--g", hg, "g(r) for the generalized form");
  hyp->add_option("--gamma", hgamma, "gamma for the generalized form");

  // series
  auto* series = app.add_subcommand("series", "Taylor-series forms");
  std::string coeffs;
  int start = 1, n_terms = 0;
  double salpha = 2.0, sbeta = 2.0, sgamma = 0.0;
  std::optional<std::string> sg;
  series->add_option("--coeffs", coeffs, "\"v@n,...\" pairs or a plain list")
      ->required();
  series->add_option("--start", start, "start index L for plain lists");
  series->add_option("--terms", n_terms, "truncation length N");
  series->add_option("--alpha", salpha, "alpha (> 1)");
  series->add_option("--beta", sbeta, "beta (> 1)");
  series->add_option("--gamma", sgamma, "gamma");
  series->add_option("--g", sg, "g(r) for the 2D series forms");

  // detect
  auto* detect = app.add_subcommand("detect", "separability detection");
  std::string d_omega;
  double d_tol = 1e-9;
  int d_grid = 12;
  detect->add_option("--omega", d_omega, "Omega(y,x) expression")->required();
  detect->add_option("--detect-tol", d_tol, "cross-ratio tolerance");
  detect->add_option("--grid", d_grid, "probe grid size per axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    common.cfg.validate();
    if (eval->parsed())
      return cmd_eval(common, f_expr, g_expr, omega_expr, alpha, beta, gamma,
                      mode);
    if (verify->parsed()) return cmd_verify(common, only, corpus_file);
    if (bench->parsed()) return cmd_bench(common, warmup, repeats);
    if (hyp->parsed()) return cmd_hyp(common, ha, hb, hc, hz, hf, hg, hgamma);
    if (series->parsed())
      return cmd_series(common, coeffs, start, n_terms, salpha, sbeta, sgamma,
                        sg);
    if (detect->parsed()) return cmd_detect(common, d_omega, d_tol, d_grid);
    std::cerr << "error: no subcommand\n";
    return kExitConfig;
  } catch (const g2g::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const g2g::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
