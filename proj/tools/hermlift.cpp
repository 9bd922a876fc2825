// hermlift: command-line front end for the Hermitian-lifted code library.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "hermlift/code.hpp"
#include "hermlift/curve.hpp"
#include "hermlift/errors.hpp"
#include "hermlift/lemma_suite.hpp"
#include "hermlift/liftcrit.hpp"
#include "hermlift/recovery.hpp"
#include "hermlift/report.hpp"

using namespace hermlift;
using report::Json;

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitError = 2;

// Commands that sweep every line refuse fields with more lines than this
// unless --force is given.
constexpr std::uint64_t kLineBudget = suite::kMaxExhaustiveLines;
// points scans q^4 (x, y) pairs.
constexpr std::uint64_t kPointScanBudget = 100'000'000;

struct Config {
  std::uint64_t p = 0;
  unsigned l = 1;
  std::string kind = "lifted-oracle";
  std::optional<std::uint64_t> r;
  std::string method = "tables";
  std::size_t trials = 100;
  std::optional<std::uint64_t> seed;
  std::size_t erasures = 1;
  std::string format = "json";
  bool force = false;
};

void add_field_options(CLI::App* cmd, Config& c) {
  cmd->add_option("--p", c.p, "characteristic")->required();
  cmd->add_option("--l", c.l, "q = p^l")->capture_default_str()->check(CLI::Range(1u, 40u));
  cmd->add_option("--format", c.format, "output format")->capture_default_str()->check(
      CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--force", c.force, "run above the desk-scale limits");
}

void add_code_options(CLI::App* cmd, Config& c) {
  cmd->add_option("--kind", c.kind, "lifted-oracle | lifted-sufficient | onepoint")
      ->capture_default_str()
      ->check(CLI::IsMember({"lifted-oracle", "lifted-sufficient", "onepoint"}));
  cmd->add_option("--r", c.r, "degree bound of the one-point code (default q^2 - 1)");
  cmd->add_option("--method", c.method, "oracle lines: tables (non-tangent) | strict (every line)")
      ->capture_default_str()
      ->check(CLI::IsMember({"tables", "strict"}));
}

std::uint64_t lines_of(const gf::Field& f) { return f.q2() * f.q2(); }

void require_budget(const Config& c, std::uint64_t cost, std::uint64_t budget, const std::string& what) {
  if (cost > budget && !c.force) {
    throw Error(Errc::TooLarge, what + " = " + std::to_string(cost) + " exceeds " + std::to_string(budget) +
                                    "; pass --force to run anyway");
  }
}

lift::LineScope scope_of(const Config& c) {
  return c.method == "strict" ? lift::LineScope::All : lift::LineScope::NonTangent;
}

std::uint64_t onepoint_r(const Config& c, const gf::Field& f) { return c.r.value_or(f.q2() - 1); }

codes::CodeOptions code_options(const Config& c, const gf::Field& f, codes::CodeKind kind) {
  return codes::CodeOptions{kind, onepoint_r(c, f), scope_of(c), Execution::Parallel};
}

Json checks_json(const std::vector<std::pair<std::string, bool>>& checks) {
  Json out = Json::object();
  for (const auto& [name, ok] : checks) out[name] = ok;
  return out;
}

bool all_ok(const std::vector<std::pair<std::string, bool>>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

// -- subcommands --------------------------------------------------------------

int cmd_points(const Config& c, const gf::Field& f) {
  require_budget(c, lines_of(f), kPointScanBudget, "q^4");
  const curve::HermitianCurve h(f);
  const bool ok = h.size() == f.q() * f.q2() && std::all_of(h.points().begin(), h.points().end(), [&](const auto& pt) {
                    return curve::is_on_curve(f, pt.x, pt.y);
                  });
  if (c.format == "csv") {
    report::points_csv(std::cout, h);
  } else {
    Json j = report::envelope("points", f);
    j["count"] = h.size();
    Json pts = Json::array();
    for (const auto& pt : h.points()) pts.push_back(Json::array({pt.x.code, pt.y.code}));
    j["points"] = std::move(pts);
    j["checks"] = checks_json({{"count_is_q3", ok}});
    std::cout << report::dump(j);
  }
  return ok ? 0 : kExitChecksFailed;
}

int cmd_good_monomials(const Config& c, const gf::Field& f) {
  require_budget(c, lines_of(f), kLineBudget, "q^4 lines");
  const auto tables = lift::ReductionTables::build(f);
  const auto verdicts = lift::classify_monomials(tables, lift::scoped_lines(f, scope_of(c)));
  const auto strict = lift::classify_monomials(tables, lift::scoped_lines(f, lift::LineScope::All));
  const auto nontangent =
      c.method == "strict" ? lift::classify_monomials(tables, lift::scoped_lines(f, lift::LineScope::NonTangent))
                           : verdicts;

  std::size_t oracle = 0, sufficient = 0, strict_count = 0, nontangent_count = 0, unsound = 0, low_bad = 0;
  for (std::size_t m = 0; m < verdicts.size(); ++m) {
    const auto& v = verdicts[m];
    oracle += v.oracle_good;
    sufficient += v.sufficient_good;
    strict_count += strict[m].oracle_good;
    nontangent_count += nontangent[m].oracle_good;
    unsound += v.sufficient_good && !nontangent[m].oracle_good;
    low_bad += v.a + v.b < f.q() && !nontangent[m].oracle_good;
  }
  const std::size_t onepoint = codes::onepoint_basis(f, f.q2() - 1).size();
  const std::vector<std::pair<std::string, bool>> checks = {{"sufficient_implies_good", unsound == 0},
                                                           {"low_degree_good", low_bad == 0}};
  if (c.format == "csv") {
    report::verdicts_csv(std::cout, verdicts);
  } else {
    Json j = report::envelope("good-monomials", f);
    j["method"] = c.method;
    j["total"] = verdicts.size();
    j["oracle_count"] = oracle;
    j["sufficient_count"] = sufficient;
    j["onepoint_count"] = onepoint;
    j["nontangent_count"] = nontangent_count;
    j["strict_count"] = strict_count;
    j["checks"] = checks_json(checks);
    std::cout << report::dump(j);
  }
  return all_ok(checks) ? 0 : kExitChecksFailed;
}

codes::CodeKind kind_of(const Config& c) { return *codes::parse_kind(c.kind); }

void require_code_budget(const Config& c, const gf::Field& f, codes::CodeKind kind) {
  if (kind == codes::CodeKind::LiftedOracle) require_budget(c, lines_of(f), kLineBudget, "q^4 lines");
  require_budget(c, f.q() * f.q2(), kLineBudget, "code length q^3");
}

int cmd_build_code(const Config& c, const gf::Field& f) {
  const auto kind = kind_of(c);
  require_code_budget(c, f, kind);
  const codes::Code code = codes::build_code(f, code_options(c, f, kind));
  std::vector<std::pair<std::string, bool>> checks = {{"full_rank", code.rank == code.k()},
                                                      {"length_is_q3", code.n() == f.q() * f.q2()}};
  if (kind == codes::CodeKind::OnePoint && codes::onepoint_formula_applies(f.q(), code.spec.r)) {
    checks.emplace_back("onepoint_dimension_formula", code.k() == codes::onepoint_dimension(f.q(), code.spec.r));
  }
  if (c.format == "csv") {
    report::generator_csv(std::cout, code);
  } else {
    Json j = report::envelope("build-code", f);
    j["kind"] = c.kind;
    if (kind == codes::CodeKind::OnePoint) j["r"] = code.spec.r;
    if (kind == codes::CodeKind::LiftedOracle) j["method"] = c.method;
    j["n"] = code.n();
    j["k"] = code.k();
    j["rank"] = code.rank;
    Json basis = Json::array();
    for (const auto& m : code.spec.basis) basis.push_back(Json::array({m.a, m.b}));
    j["basis"] = std::move(basis);
    j["checks"] = checks_json(checks);
    std::cout << report::dump(j);
  }
  return all_ok(checks) ? 0 : kExitChecksFailed;
}

int cmd_rate_report(const Config& c, const gf::Field& f) {
  require_code_budget(c, f, codes::CodeKind::LiftedOracle);
  const auto oracle = codes::build_code(f, code_options(c, f, codes::CodeKind::LiftedOracle));
  const auto sufficient = codes::build_code(f, code_options(c, f, codes::CodeKind::LiftedSufficient));
  const auto onepoint = codes::build_code(f, code_options(c, f, codes::CodeKind::OnePoint));
  const auto rep = codes::rate_report(oracle);
  const lift::Rational rate_sufficient(static_cast<std::int64_t>(sufficient.k()),
                                       static_cast<std::int64_t>(sufficient.n()));
  const lift::Rational rate_onepoint(static_cast<std::int64_t>(onepoint.k()), static_cast<std::int64_t>(onepoint.n()));
  const std::vector<std::pair<std::string, bool>> checks = {
      {"oracle_rate_ge_bound", rep.rate_ge_bound},
      {"oracle_k_ge_onepoint_k", oracle.k() >= onepoint.k()},
      {"oracle_k_ge_sufficient_k", oracle.k() >= sufficient.k()},
  };
  if (c.format == "csv") {
    std::cout << "metric,num,den\n";
    const auto row = [](const char* name, const lift::Rational& v) {
      std::cout << name << ',' << v.numerator() << ',' << v.denominator() << '\n';
    };
    row("n", lift::Rational(static_cast<std::int64_t>(rep.n)));
    row("k_oracle", lift::Rational(static_cast<std::int64_t>(oracle.k())));
    row("k_sufficient", lift::Rational(static_cast<std::int64_t>(sufficient.k())));
    row("k_onepoint", lift::Rational(static_cast<std::int64_t>(onepoint.k())));
    row("rate_oracle", rep.rate);
    row("rate_sufficient", rate_sufficient);
    row("rate_onepoint", rate_onepoint);
    row("rate_bound", rep.rate_bound);
  } else {
    Json j = report::envelope("rate-report", f);
    j["method"] = c.method;
    j["r_onepoint"] = onepoint.spec.r;
    j["n"] = rep.n;
    j["k_oracle"] = oracle.k();
    j["k_sufficient"] = sufficient.k();
    j["k_onepoint"] = onepoint.k();
    j["rates"] = Json{{"oracle", report::rational(rep.rate)},
                      {"sufficient", report::rational(rate_sufficient)},
                      {"onepoint", report::rational(rate_onepoint)}};
    j["rate_bound"] = report::rational(rep.rate_bound);
    j["rate_bound_source"] = f.p() == 2 ? "characteristic-2 constant" : "odd-p closed form";
    j["comparisons"] = checks_json(checks);
    std::cout << report::dump(j);
  }
  return all_ok(checks) ? 0 : kExitChecksFailed;
}

int cmd_verify_lemmas(const Config& c, const gf::Field& f) {
  suite::SuiteOptions opts;
  opts.force = c.force;
  opts.seed = c.seed.value_or(1);
  const auto results = suite::run_lemma_suite(f, opts);
  const bool ok = suite::all_passed(results);
  if (c.format == "csv") {
    report::checks_csv(std::cout, results);
  } else {
    Json j = report::envelope("verify-lemmas", f);
    j["mode"] = f.p() == 2 ? "characteristic-2" : "odd";
    j["sampled"] = !suite::exhaustive_feasible(f);
    j["seed"] = opts.seed;
    Json list = Json::array();
    for (const auto& r : results) list.push_back(report::check(r));
    j["checks"] = std::move(list);
    j["all_passed"] = ok;
    std::cout << report::dump(j);
  }
  return ok ? 0 : kExitChecksFailed;
}

int cmd_simulate_recovery(const Config& c, const gf::Field& f) {
  const auto kind = kind_of(c);
  require_code_budget(c, f, kind);
  if (c.trials == 0) throw Error(Errc::InvalidArgument, "--trials must be >= 1");
  const codes::Code code = codes::build_code(f, code_options(c, f, kind));
  const recovery::SimulationOptions opts{c.trials, *c.seed, c.erasures};
  const auto rep = recovery::erasure_simulation(code, opts);
  std::vector<std::pair<std::string, bool>> checks = {{"no_failures", rep.failures.empty()}};
  if (c.erasures == 1) {
    checks.emplace_back("all_sets_recovered", rep.sets_recovered == rep.trials * (f.q2() - 1));
  }
  if (c.format == "csv") {
    std::cout << "set,successes\n";
    for (std::size_t s = 0; s < rep.per_set_success.size(); ++s) {
      std::cout << s << ',' << rep.per_set_success[s] << '\n';
    }
  } else {
    Json j = report::envelope("simulate-recovery", f);
    j["kind"] = c.kind;
    j["n"] = code.n();
    j["k"] = code.k();
    j["report"] = report::erasures(rep);
    j["checks"] = checks_json(checks);
    std::cout << report::dump(j);
  }
  return all_ok(checks) ? 0 : kExitChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian-lifted locally recoverable codes"};
  app.require_subcommand(1);
  Config c;

  auto* points = app.add_subcommand("points", "enumerate the affine points of the Hermitian curve");
  add_field_options(points, c);

  auto* good = app.add_subcommand("good-monomials", "classify every monomial x^a y^b");
  add_field_options(good, c);
  good->add_option("--method", c.method, "oracle lines: tables (non-tangent) | strict (every line)")
      ->capture_default_str()
      ->check(CLI::IsMember({"tables", "strict"}));

  auto* build = app.add_subcommand("build-code", "build a code and its generator matrix");
  add_field_options(build, c);
  add_code_options(build, c);

  auto* rate = app.add_subcommand("rate-report", "dimensions and rates against the lower bound");
  add_field_options(rate, c);
  rate->add_option("--r", c.r, "degree bound of the one-point code (default q^2 - 1)");
  rate->add_option("--method", c.method, "oracle lines: tables (non-tangent) | strict (every line)")
      ->capture_default_str()
      ->check(CLI::IsMember({"tables", "strict"}));

  auto* verify = app.add_subcommand("verify-lemmas", "run the exact invariant suite");
  add_field_options(verify, c);
  verify->add_option("--seed", c.seed, "seed for sampled checks (default 1)");

  auto* sim = app.add_subcommand("simulate-recovery", "seeded local erasure repair trials");
  add_field_options(sim, c);
  add_code_options(sim, c);
  sim->add_option("--trials", c.trials, "number of trials")->capture_default_str();
  sim->add_option("--seed", c.seed, "PRNG seed");
  sim->add_option("--erasures", c.erasures, "erased positions per trial")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!c.seed && sim->parsed()) {
      c.seed = std::random_device{}();
      std::cerr << "seed: " << *c.seed << '\n';
    }
    const gf::Field f = gf::Field::create(c.p, c.l);
    if (points->parsed()) return cmd_points(c, f);
    if (good->parsed()) return cmd_good_monomials(c, f);
    if (build->parsed()) return cmd_build_code(c, f);
    if (rate->parsed()) return cmd_rate_report(c, f);
    if (verify->parsed()) return cmd_verify_lemmas(c, f);
    return cmd_simulate_recovery(c, f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
