#include "g2g/corpus.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace g2g {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

FuncSpec fn1(const char* label, double (*fn)(double)) {
  return FuncSpec::from_function1(label, fn);
}

std::vector<CorpusEntry> build_default_corpus() {
  std::vector<CorpusEntry> c;

  c.push_back({"classical", FuncSpec::one(), FuncSpec::one(),
               FuncSpec::constant(0.0), FuncSpec::constant(0.0), true});

  c.push_back({"linear",
               fn1("u", [](double u) { return u; }),
               fn1("r", [](double r) { return r; }),
               FuncSpec::constant(1.0), FuncSpec::constant(1.0), true});

  c.push_back({"bump-expdecay",
               fn1("u*(1-u)", [](double u) { return u * (1.0 - u); }),
               fn1("exp(-r)", [](double r) { return std::exp(-r); }),
               fn1("1-2u", [](double u) { return 1.0 - 2.0 * u; }),
               fn1("-exp(-r)", [](double r) { return -std::exp(-r); }), true});

  c.push_back({"square-peak",
               fn1("u^2", [](double u) { return u * u; }),
               fn1("r*exp(-r/2)", [](double r) { return r * std::exp(-0.5 * r); }),
               fn1("2u", [](double u) { return 2.0 * u; }),
               fn1("(1-r/2)exp(-r/2)",
                   [](double r) { return (1.0 - 0.5 * r) * std::exp(-0.5 * r); }),
               true});

  c.push_back({"sine-rational",
               fn1("sin(pi*u)", [](double u) { return std::sin(kPi * u); }),
               fn1("1/(1+r)", [](double r) { return 1.0 / (1.0 + r); }),
               fn1("pi*cos(pi*u)",
                   [](double u) { return kPi * std::cos(kPi * u); }),
               fn1("-1/(1+r)^2",
                   [](double r) { return -1.0 / ((1.0 + r) * (1.0 + r)); }),
               true});

  c.push_back({"mirror-halfdecay",
               fn1("1-u", [](double u) { return 1.0 - u; }),
               fn1("exp(-r/2)", [](double r) { return std::exp(-0.5 * r); }),
               FuncSpec::constant(-1.0),
               fn1("-exp(-r/2)/2",
                   [](double r) { return -0.5 * std::exp(-0.5 * r); }),
               true});

  c.push_back({"exp-sqrt",
               fn1("exp(u)", [](double u) { return std::exp(u); }),
               fn1("sqrt(r)", [](double r) { return std::sqrt(r); }),
               fn1("exp(u)", [](double u) { return std::exp(u); }),
               fn1("1/(2*sqrt(r))",
                   [](double r) { return 0.5 / std::sqrt(r); }),
               true});

  c.push_back({"rational-quadratic",
               fn1("1/(1+u)", [](double u) { return 1.0 / (1.0 + u); }),
               fn1("1+r^2", [](double r) { return 1.0 + r * r; }),
               fn1("-1/(1+u)^2",
                   [](double u) { return -1.0 / ((1.0 + u) * (1.0 + u)); }),
               fn1("2r", [](double r) { return 2.0 * r; }), true});

  c.push_back({"cubic-bump",
               fn1("u^2*(1-u)", [](double u) { return u * u * (1.0 - u); }),
               fn1("(1+r)exp(-r)",
                   [](double r) { return (1.0 + r) * std::exp(-r); }),
               fn1("2u-3u^2", [](double u) { return 2.0 * u - 3.0 * u * u; }),
               fn1("-r*exp(-r)", [](double r) { return -r * std::exp(-r); }),
               true});

  c.push_back({"gauss-wave",
               fn1("exp(-u^2)", [](double u) { return std::exp(-u * u); }),
               fn1("2+sin(r)", [](double r) { return 2.0 + std::sin(r); }),
               fn1("-2u*exp(-u^2)",
                   [](double u) { return -2.0 * u * std::exp(-u * u); }),
               fn1("cos(r)", [](double r) { return std::cos(r); }), true});

  return c;
}

}  // namespace

const std::vector<CorpusEntry>& default_corpus() {
  static const std::vector<CorpusEntry> corpus = build_default_corpus();
  return corpus;
}

std::vector<Params> ParamGrid::cells() const {
  std::vector<Params> out;
  out.reserve(alphas.size() * betas.size() * gammas.size());
  for (double a : alphas)
    for (double b : betas)
      for (double g : gammas) out.emplace_back(a, b, g);
  return out;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("corpus file not readable: " + path);
  nlohmann::json doc;
  in >> doc;
  if (!doc.is_array()) throw DomainError("corpus file must be a JSON array");

  std::vector<CorpusEntry> out;
  for (const auto& item : doc) {
    CorpusEntry e{item.value("name", std::string("unnamed")),
                  FuncSpec::from_text(item.at("f").get<std::string>()),
                  FuncSpec::from_text(item.at("g").get<std::string>()),
                  std::nullopt,
                  std::nullopt,
                  item.value("admissible", true)};
    if (item.contains("fprime"))
      e.fprime = FuncSpec::from_text(item["fprime"].get<std::string>());
    if (item.contains("gprime"))
      e.gprime = FuncSpec::from_text(item["gprime"].get<std::string>());
    out.push_back(std::move(e));
  }
  if (out.empty()) throw DomainError("corpus file contains no entries");
  return out;
}

}  // namespace g2g
