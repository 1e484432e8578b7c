#include "octaboson/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "octaboson/errors.hpp"
#include "octaboson/hallittlewood.hpp"
#include "octaboson/json_io.hpp"
#include "octaboson/kernels.hpp"
#include "octaboson/suites.hpp"

namespace octaboson {

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const NotDivisibleError*>(&error)) return kExitNotDivisible;
  if (dynamic_cast<const ResourceError*>(&error)) return kExitBudget;
  return kExitFailure;
}

std::string error_kind(const std::exception& error) {
  if (dynamic_cast<const NotDivisibleError*>(&error)) return "not-divisible";
  if (dynamic_cast<const ResourceError*>(&error)) return "budget";
  if (dynamic_cast<const GenericityError*>(&error)) return "genericity";
  if (dynamic_cast<const ConditioningError*>(&error)) return "conditioning";
  if (dynamic_cast<const EvaluationError*>(&error)) return "evaluation";
  if (dynamic_cast<const PreconditionError*>(&error)) return "precondition";
  if (dynamic_cast<const DomainError*>(&error)) return "domain";
  return "internal";
}

namespace {

enum class Command { none, poly, verify };

/// Everything a command needs, as read from the flags.
struct RunConfig {
  Command command = Command::none;
  std::string suite;
  std::size_t n = 2;
  int max_part = 3;
  int max_site = 5;
  int points_per_dim = 0;
  int samples = 20;
  int threads = 0;
  std::uint64_t seed = 1;
  std::string lambda;
  std::string q;
  std::string t[4];
  std::string profile = "four";
  std::string relation = "all";
  std::string out;
  std::string format = "json";
  bool compare_macdonald = false;
};

ParamSet build_params(const RunConfig& cfg) {
  const Profile profile = parse_profile(cfg.profile);
  const ParamSet base = ParamSet::defaults(profile);
  const Rational q = cfg.q.empty() ? base.q() : parse_rational(cfg.q);
  std::array<Rational, 4> t = base.couplings();
  for (int r = 0; r < 4; ++r) {
    if (!cfg.t[r].empty()) t[static_cast<std::size_t>(r)] = parse_rational(cfg.t[r]);
  }
  return ParamSet(q, t, profile);
}

Partition parse_lambda(const std::string& text, std::size_t n) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("--lambda: not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw DomainError("--lambda: not an integer list: '" + text + "'");
    parts.push_back(value);
  }
  if (parts.size() != n) throw DomainError("--lambda: expected " + std::to_string(n) + " parts");
  return Partition(parts);
}

Json poly_report(const RunConfig& cfg, const ParamSet& params) {
  const Partition lambda = parse_lambda(cfg.lambda, cfg.n);
  const HLPolynomial hl = hl_explicit(lambda, params);
  Json doc = to_json(hl);
  doc["params"] = to_json(params);
  const Rational value = principal_specialization(hl);
  const Rational expected = 1 / c_lambda(lambda, params);
  doc["principalSpecialization"] = Json{{"value", to_string(value)}, {"expected", to_string(expected)},
                                        {"equal", value == expected}};
  if (cfg.compare_macdonald) {
    if (params.profile() != Profile::two) throw DomainError("--compare-macdonald needs --profile two");
    doc["equal"] = macdonald_bc(lambda, params).poly == hl.poly;
  }
  return doc;
}

std::string poly_csv(const Json& doc) {
  std::ostringstream os;
  os << "mu,coeff\n";
  for (const auto& entry : doc.at("expansion")) {
    std::string mu;
    for (const auto& part : entry.at("mu")) mu += (mu.empty() ? "" : " ") + std::to_string(part.get<int>());
    os << mu << ',' << entry.at("coeff").get<std::string>() << '\n';
  }
  return os.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw DomainError("cannot open --out file '" + cfg.out + "'");
  file << text;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.threads > 0) kernels::set_worker_count(cfg.threads);
  const ParamSet params = build_params(cfg);
  if (cfg.command == Command::poly) {
    const Json doc = poly_report(cfg, params);
    emit(cfg, cfg.format == "csv" ? poly_csv(doc) : doc.dump(2) + "\n", out);
    const bool ok = doc.at("principalSpecialization").at("equal").get<bool>() && doc.value("equal", true);
    return ok ? kExitOk : kExitFailure;
  }

  SuiteConfig suite;
  suite.n = cfg.n;
  suite.max_part = cfg.max_part;
  suite.max_site = cfg.max_site;
  suite.params = params;
  suite.points_per_dim = cfg.points_per_dim;
  suite.seed = cfg.seed;
  suite.samples = cfg.samples;
  suite.relation = cfg.relation;
  VerificationReport report;
  Json doc;
  if (cfg.suite == "orthogonality") {
    const auto table = orthogonality_table(suite);
    report = orthogonality_report(table, suite);
    doc = to_json(report);
    const Json extra = to_json(table);
    doc["M"] = extra.at("M");
    doc["pairs"] = extra.at("pairs");
  } else {
    report = run_suite(cfg.suite, suite);
    doc = to_json(report);
  }
  emit(cfg, cfg.format == "csv" ? to_csv(report) : doc.dump(2) + "\n", out);
  if (!report.pass) err << cfg.suite << ": " << report.failures() << " failing case(s)\n";
  return report.pass ? kExitOk : kExitFailure;
}

void add_shared(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--n", cfg.n, "Sector size (number of particles)")->check(CLI::Range(0, 8));
  cmd->add_option("--maxPart", cfg.max_part, "Largest part enumerated")->check(CLI::NonNegativeNumber);
  cmd->add_option("--q", cfg.q, "q as an exact rational");
  cmd->add_option("--t1", cfg.t[0], "t1 as an exact rational");
  cmd->add_option("--t2", cfg.t[1], "t2 as an exact rational");
  cmd->add_option("--t3", cfg.t[2], "t3 as an exact rational");
  cmd->add_option("--t4", cfg.t[3], "t4 as an exact rational");
  cmd->add_option("--profile", cfg.profile, "Formula family")->check(CLI::IsMember({"four", "three", "two"}));
  cmd->add_option("--M", cfg.points_per_dim, "Quadrature points per dimension")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", cfg.seed, "Seed for random spectral points");
  cmd->add_option("--out", cfg.out, "Write the report to this file");
  cmd->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--threads", cfg.threads, "Worker threads for the parallel kernels")->check(CLI::NonNegativeNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Hyperoctahedral Hall-Littlewood polynomials and the boundary q-boson algebra"};
  app.require_subcommand(1);

  auto* poly = app.add_subcommand("poly", "Construct p_lambda exactly and report its monomial expansion");
  add_shared(poly, cfg);
  poly->add_option("--lambda", cfg.lambda, "Partition as a comma list")->required();
  poly->add_flag("--compare-macdonald", cfg.compare_macdonald, "Compare against Macdonald's formula");
  poly->callback([&] { cfg.command = Command::poly; });

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_shared(verify, cfg);
  verify->add_option("suite", cfg.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--relation", cfg.relation, "Relation family (com-a .. com-e, com-a1, ..., all)");
  verify->add_option("--maxSite", cfg.max_site, "Largest site index l, k")->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", cfg.samples, "Random points per sector")->check(CLI::PositiveNumber);
  verify->callback([&] { cfg.command = Command::verify; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    return execute(cfg, out, err);
  } catch (const std::exception& e) {
    const Json doc = error_json(error_kind(e), e.what());
    err << "error: " << e.what() << '\n';
    out << doc.dump() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace octaboson
