#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ceerlab/ceer_io.hpp"
#include "ceerlab/lab/scenario.hpp"
#include "ceerlab/lab/verify.hpp"

namespace {

using namespace ceerlab;

struct RunOptions {
  std::string scenario;
  std::string out;
  std::map<std::string, std::string> overrides;
};

int cmd_run(const RunOptions& opt) {
  Scenario sc = load_scenario(opt.scenario);
  for (const auto& [k, v] : opt.overrides) sc.set_param(k, v);
  RunOutcome outcome = run_scenario(sc);
  std::string out = opt.out;
  if (out.empty()) out = std::filesystem::path(opt.scenario).stem().string() + ".log.jsonl";
  outcome.log.save(out);
  std::cout << outcome.summary;
  if (!outcome.summary.empty() && outcome.summary.back() != '\n') std::cout << '\n';
  std::cout << "log: " << out << " (" << outcome.log.records.size() << " records)\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::string& suite) {
  RunLog log = RunLog::load(path);
  std::vector<std::string> suites;
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      try {
        verify_log(log, name);
        suites.push_back(name);
      } catch (const InvalidInput&) {
      }
    }
  } else {
    suites.push_back(suite);
  }
  bool ok = true;
  for (const auto& name : suites) {
    SuiteReport r = verify_log(log, name);
    std::cout << r.describe() << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

ReductionFn load_map(const std::string& spec, Natural bound) {
  if (spec == "identity") return ReductionFn::identity(bound);
  if (spec.rfind("constant:", 0) == 0) return ReductionFn::constant(bound, std::stoull(spec.substr(9)));
  ReductionFn f = load_reduction_file(spec);
  if (f.totality_bound() == 0) f.set_totality_bound(bound);
  return f;
}

struct ProbeOptions {
  std::string dump;
  std::string sub;
  std::vector<Natural> args;
  std::vector<std::string> others;
  std::optional<Stage> stage;
  std::optional<Natural> bound;
  std::string map = "identity";
};

int cmd_probe(const ProbeOptions& o) {
  const CeerTable e = load_pairs_file(o.dump);
  const Stage stage = o.stage.value_or(kFinalStage);
  const Natural bound = o.bound.value_or(e.bound());
  std::vector<CeerTable> others;
  for (const auto& path : o.others) others.push_back(load_pairs_file(path));

  if (o.sub == "related") {
    if (o.args.size() != 2) throw InvalidInput("related needs two indices");
    std::cout << (e.related(o.args[0], o.args[1], stage) ? "true" : "false") << '\n';
  } else if (o.sub == "classes") {
    dump_classes(std::cout, e.snapshot(stage).restricted(std::min(bound, e.bound())));
  } else if (o.sub == "product") {
    if (others.size() != 1) throw InvalidInput("product needs a second dump");
    dump_pairs(std::cout, product(e, others[0], bound));
  } else if (o.sub == "join") {
    std::vector<CeerTable> columns{e};
    columns.insert(columns.end(), others.begin(), others.end());
    dump_pairs(std::cout, uniform_join(columns, bound));
  } else if (o.sub == "pullback") {
    dump_pairs(std::cout, pullback(load_map(o.map, bound), others.empty() ? e : others[0], bound));
  } else if (o.sub == "verify-reduction") {
    const CeerTable& r = others.empty() ? e : others[0];
    ReductionReport rep = verify_reduction(load_map(o.map, bound), e, r, bound, stage);
    for (auto [i, j] : rep.positive_violations)
      std::cout << "violation: " << i << " ~ " << j << " but images are not related\n";
    for (auto [i, j] : rep.unaligned_so_far)
      std::cout << "pending: images of " << i << ", " << j << " related, arguments not yet\n";
    if (rep.no_violations()) std::cout << "no violations\n";
    return rep.no_violations() ? 0 : 1;
  } else {
    throw InvalidInput("unknown probe '" + o.sub + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ceerlab: ceers, graded algebras and priority constructions at desk scale"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "run a scenario file and write its log");
  run_cmd->add_option("scenario", run.scenario, "scenario file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--out,-o", run.out, "log path (default <scenario>.log.jsonl)");
  for (const char* key : {"stages", "maxdeg", "base", "levels", "epsilon", "modulus", "unit-exponent"}) {
    run_cmd->add_option_function<std::string>(
        std::string("--") + key, [&run, key](const std::string& v) { run.overrides[key] = v; },
        std::string("override the scenario's ") + key);
  }

  std::string log_path, suite;
  auto* verify_cmd = app.add_subcommand("verify", "check an invariant suite against a run log");
  verify_cmd->add_option("log", log_path, "run log")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();

  ProbeOptions probe;
  auto* probe_cmd = app.add_subcommand("probe", "query a ceer dump");
  probe_cmd->add_option("dump", probe.dump, "pair dump")->required()->check(CLI::ExistingFile);
  probe_cmd->add_option("subcommand", probe.sub,
                        "related | classes | product | join | pullback | verify-reduction")
      ->required()
      ->check(CLI::IsMember({"related", "classes", "product", "join", "pullback", "verify-reduction"}));
  probe_cmd->add_option("args", probe.args, "indices for 'related'");
  probe_cmd->add_option("--with", probe.others, "further dumps (product, join, target of pullback)");
  probe_cmd->add_option("--stage", probe.stage, "stage to query (default: final)");
  probe_cmd->add_option("--bound", probe.bound, "working bound (default: the dump's)");
  probe_cmd->add_option("--map", probe.map, "identity | constant:c | reduction dump");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*verify_cmd) return cmd_verify(log_path, suite);
    return cmd_probe(probe);
  } catch (const ceerlab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
