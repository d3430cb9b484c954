// Command-line front end. Every command prints JSON lines (or TSV with
// --format tsv) on stdout; diagnostics go to stderr.
//
// Exit codes: 0 pass, 1 usage error, 2 fail, 3 inconclusive.

#include <CLI11.hpp>

#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kleinian/json_io.hpp"
#include "kleinian/rootmorita.hpp"
#include "kleinian/series.hpp"
#include "kleinian/toric.hpp"
#include "kleinian/verify.hpp"

namespace {

using namespace kleinian;
using verify::Json;
using verify::Outcome;
using verify::VerificationReport;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;
constexpr int kExitInconclusive = 3;

struct RunConfig {
  std::string command;
  int n = 2;
  std::string k;
  std::string b;
  int p = 0;
  long window = 12;
  long box = 20;
  long order = 10;
  long level = 20;
  std::string format = "json";
  std::uint64_t seed = 20240101;
  bool mutate = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

weyl::ParamVector parse_k(const RunConfig& cfg) {
  if (cfg.k.empty()) return weyl::ParamVector::zero(cfg.n);
  return weyl::ParamVector(cfg.n, parse_rational_list(cfg.k));
}

std::vector<long> parse_b(const std::string& text, int n) {
  if (text.empty()) return std::vector<long>(n - 1, 0);
  auto b = parse_integer_list(text);
  if (static_cast<int>(b.size()) != n - 1)
    throw std::invalid_argument("dimension mismatch: b has " + std::to_string(b.size()) + " entries, expected " +
                                std::to_string(n - 1));
  return b;
}

std::vector<long> unit_vector(int n, int p) {
  std::vector<long> b(n - 1, 0);
  b[p - 1] = 1;
  return b;
}

class Emitter {
 public:
  explicit Emitter(std::string format) : format_(std::move(format)) {}

  void data(const Json& record, const std::vector<std::vector<std::string>>& tsv_rows) {
    if (format_ == "json") {
      std::cout << record.dump() << '\n';
      return;
    }
    for (const auto& row : tsv_rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "\t" : "") << row[i];
      std::cout << '\n';
    }
  }

  void report(const VerificationReport& r) {
    record(r.outcome);
    if (format_ == "json") {
      std::cout << r.to_json().dump() << '\n';
      return;
    }
    std::cout << r.id << '\t' << r.params.dump() << '\t' << verify::to_string(r.outcome) << '\t'
              << r.witness.value_or("") << '\n';
  }

  void record(Outcome o) { counts_[o] += 1; }

  int exit_code() const {
    if (count(Outcome::Fail)) return kExitFail;
    if (count(Outcome::Inconclusive)) return kExitInconclusive;
    return kExitPass;
  }

  void summary() {
    const Json s{{"summary",
                  {{"pass", count(Outcome::Pass)},
                   {"fail", count(Outcome::Fail)},
                   {"inconclusive", count(Outcome::Inconclusive)}}}};
    data(s, {{"summary", std::to_string(count(Outcome::Pass)), std::to_string(count(Outcome::Fail)),
              std::to_string(count(Outcome::Inconclusive))}});
  }

 private:
  int count(Outcome o) const {
    auto it = counts_.find(o);
    return it == counts_.end() ? 0 : it->second;
  }

  std::string format_;
  std::map<Outcome, int> counts_;
};

std::vector<std::vector<std::string>> dims_rows(const Json& list, long lo) {
  std::vector<std::vector<std::string>> rows{{"degree", "dimension"}};
  for (std::size_t i = 0; i < list.size(); ++i)
    rows.push_back({std::to_string(lo + static_cast<long>(i)), list[i].get<std::string>()});
  return rows;
}

int run_all(const RunConfig& cfg, Emitter& out) {
  const int n = cfg.n;
  const auto k = parse_k(cfg);
  const bool dominant = roots::is_dominant(k).dominant;
  const std::vector<long> ones(n - 1, 1), zeros(n - 1, 0);
  const auto e1 = unit_vector(n, 1);
  std::vector<std::vector<long>> steps{e1};
  if (ones != e1) steps.push_back(ones);

  std::vector<std::function<VerificationReport()>> jobs;
  std::vector<std::vector<long>> divisors{zeros};
  divisors.insert(divisors.end(), steps.begin(), steps.end());
  for (const auto& b : divisors) jobs.push_back([=] { return verify::verify_abl(n, b, cfg.window); });
  jobs.push_back([=] { return verify::verify_multiplicativity(n, e1, ones, {cfg.box, cfg.box}); });
  jobs.push_back([=] { return verify::verify_identities(k); });
  jobs.push_back([=] { return verify::verify_associativity(n, cfg.seed, 100); });
  jobs.push_back([=] { return verify::verify_hodges(k); });
  jobs.push_back([=] { return verify::verify_cbh(k); });
  for (int p = 1; p <= n - 1; ++p) jobs.push_back([=] { return verify::verify_morita(k, p, cfg.seed); });
  jobs.push_back([=] { return verify::verify_dominance(n, cfg.seed, 10); });
  jobs.push_back([=] { return verify::verify_standard_modules(k, cfg.window, cfg.seed); });
  if (dominant) {
    for (const auto& b : steps) {
      jobs.push_back([=] { return verify::verify_krs(k, b, cfg.order); });
      jobs.push_back([=] { return verify::verify_mod_z_chain(k, b, cfg.window, cfg.order); });
    }
    jobs.push_back([=] { return verify::verify_obar(k, e1, cfg.window, cfg.order); });
    jobs.push_back([=] { return verify::verify_bteng(k, e1, cfg.window, cfg.order); });
  }

  std::vector<std::future<VerificationReport>> futures;
  futures.reserve(jobs.size());
  for (auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
  for (auto& f : futures) out.report(f.get());
  if (!dominant) {
    out.data({{"skipped", {"krs", "obar", "bteng", "mod-z-chain"}}, {"reason", "k is not dominant"}},
             {{"skipped", "krs,obar,bteng,mod-z-chain", "k is not dominant"}});
  }
  out.summary();
  return out.exit_code();
}

int run(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "tsv") throw UsageError("unknown format '" + cfg.format + "'");
  Emitter out(cfg.format);
  const int n = cfg.n;
  const std::string& cmd = cfg.command;

  if (cmd == "fan") {
    const auto fan = toric::build_fan(n);
    std::vector<std::vector<std::string>> rows{{"chart", "g1", "g2"}};
    for (int i = 0; i < n; ++i) {
      const auto [g1, g2] = fan.chart_generators(i);
      rows.push_back({std::to_string(i), "(" + std::to_string(g1.x) + "," + std::to_string(g1.y) + ")",
                      "(" + std::to_string(g2.x) + "," + std::to_string(g2.y) + ")"});
    }
    out.data(json_io::fan(fan), rows);
    return kExitPass;
  }
  if (cmd == "sections") {
    const auto spec = toric::divisor_spec(n, parse_b(cfg.b, n));
    const auto set = toric::enumerate_sections(spec, {cfg.box, cfg.box});
    std::vector<std::vector<std::string>> rows{{"u1", "u2", "r", "s"}};
    for (const auto& m : set.monomials) {
      const auto w = m.weight(n);
      rows.push_back({std::to_string(m.u1), std::to_string(m.u2), std::to_string(w.r), std::to_string(w.s)});
    }
    out.data(json_io::section_set(set), rows);
    return kExitPass;
  }
  if (cmd == "abl-series") {
    const auto spec = toric::divisor_spec(n, parse_b(cfg.b, n));
    Json charts = Json::array();
    for (const auto& t : toric::abl_fixed_point_terms(spec)) charts.push_back(json_io::ratfun(t));
    const auto total = toric::abl_series(spec);
    std::vector<std::vector<std::string>> rows{{"r", "s", "coefficient"}};
    for (const auto& [m, c] : total.numerator().terms())
      rows.push_back({std::to_string(m.r), std::to_string(m.s), to_string(c)});
    out.data({{"divisor", json_io::divisor(spec)}, {"series", json_io::ratfun(total)}, {"charts", charts}}, rows);
    return kExitPass;
  }
  if (cmd == "expand") {
    const auto b = parse_b(cfg.b, n);
    const auto spec = toric::divisor_spec(n, b);
    const auto t = series::expand(toric::abl_series(spec), {n + 1, 1}, cfg.level);
    std::vector<std::vector<std::string>> rows{{"r", "s", "coefficient"}};
    for (const auto& [m, c] : t.coefficients) rows.push_back({std::to_string(m.r), std::to_string(m.s), to_string(c)});
    out.data(json_io::truncated(t), rows);
    out.report(verify::verify_abl(n, b, cfg.level, cfg.mutate));
    return out.exit_code();
  }
  if (cmd == "krs") {
    out.report(verify::verify_krs(parse_k(cfg), parse_b(cfg.b, n), cfg.order, cfg.mutate));
    return out.exit_code();
  }
  if (cmd == "obar") {
    const auto r = verify::verify_obar(parse_k(cfg), parse_b(cfg.b, n), cfg.window, cfg.order, cfg.mutate);
    if (cfg.format == "tsv" && r.details.contains("dims")) out.data({}, dims_rows(r.details["dims"], -n));
    out.report(r);
    return out.exit_code();
  }
  if (cmd == "bteng") {
    const auto r = verify::verify_bteng(parse_k(cfg), parse_b(cfg.b, n), cfg.window, cfg.order, cfg.mutate);
    if (cfg.format == "tsv" && r.details.contains("assembled")) out.data({}, dims_rows(r.details["assembled"], 0));
    out.report(r);
    return out.exit_code();
  }
  if (cmd == "morita") {
    const auto k = parse_k(cfg);
    if (cfg.p != 0 && (cfg.p < 1 || cfg.p > n - 1)) throw UsageError("p must lie in 1.." + std::to_string(n - 1));
    for (int p = 1; p <= n - 1; ++p)
      if (cfg.p == 0 || cfg.p == p) out.report(verify::verify_morita(k, p, cfg.seed, cfg.mutate));
    return out.exit_code();
  }
  if (cmd == "dominant") {
    const auto k = parse_k(cfg);
    const auto ev = roots::is_dominant(k);
    std::string culprits;
    for (const auto& c : ev.culprits)
      culprits += (culprits.empty() ? "" : ",") + std::string("e") + std::to_string(c.i) + "-e" + std::to_string(c.j);
    out.data({{"n", n}, {"k", json_io::rational_list(k.values())}, {"dominant", json_io::dominance(ev)}},
             {{"dominant", ev.dominant ? "true" : "false", culprits}});
    out.record(ev.dominant ? Outcome::Pass : Outcome::Fail);
    return out.exit_code();
  }
  if (cmd == "hodges") {
    out.report(verify::verify_hodges(parse_k(cfg), cfg.mutate));
    return out.exit_code();
  }
  if (cmd == "cbh") {
    out.report(verify::verify_cbh(parse_k(cfg), cfg.mutate));
    return out.exit_code();
  }
  if (cmd == "identities") {
    const auto k = parse_k(cfg);
    out.report(verify::verify_identities(k, cfg.mutate));
    out.report(verify::verify_associativity(n, cfg.seed, 100));
    return out.exit_code();
  }
  if (cmd == "all") return run_all(cfg, out);
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for deformed type A Kleinian singularities and their toric resolutions"};
  RunConfig cfg;
  app.add_option("command", cfg.command,
                 "fan | sections | abl-series | expand | krs | obar | morita | dominant | hodges | cbh | "
                 "identities | bteng | all")
      ->required();
  app.add_option("--n", cfg.n, "order of the cyclic group")->capture_default_str();
  app.add_option("--k", cfg.k, "parameter vector, comma-separated fractions (default 0)");
  app.add_option("--b", cfg.b, "divisor vector, comma-separated nonnegative integers (default 0)");
  app.add_option("--p", cfg.p, "step index for morita (default: all)");
  app.add_option("--window", cfg.window, "maximal degree for series comparisons")->capture_default_str();
  app.add_option("--box", cfg.box, "weight box for section sets")->capture_default_str();
  app.add_option("--order", cfg.order, "order bound for bimodule windows")->capture_default_str();
  app.add_option("--level", cfg.level, "level of the series expansion")->capture_default_str();
  app.add_option("--format", cfg.format, "json | tsv")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
  app.add_flag("--mutate", cfg.mutate, "run on the built-in corrupted input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
