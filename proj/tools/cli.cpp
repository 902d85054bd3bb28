#include "cli.hpp"

#include <filesystem>
#include <fstream>

#include <CLI11.hpp>

#include "feyncount/compositions.hpp"
#include "feyncount/counting.hpp"
#include "feyncount/format.hpp"
#include "feyncount/verify.hpp"
#include "feyncount/wick_oracle.hpp"

namespace feyncount::cli {

namespace {

struct RunConfig {
  Order max_order = 0;
  Order order = 1;
  unsigned n = 1;
  std::string method = "recurrence";
  std::string format = "table";
  bool oracle_override = false;
  bool no_oracle = false;
  bool list = false;
  std::uint64_t term_budget = kDefaultTermBudget;
  unsigned workers = 1;
  std::string dot_dir;
};

oracle::OracleOptions oracle_options(const RunConfig& cfg) {
  return {cfg.oracle_override, cfg.workers};
}

void write_diagrams(const oracle::OrbitCensus& census, Order m, const std::string& dir,
                    std::ostream& out) {
  std::filesystem::create_directories(dir);
  std::size_t index = 1;
  for (const auto& rep : census.representatives) {
    const auto path = std::filesystem::path(dir) / oracle::diagram_file_name(m, index++);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path.string());
    file << oracle::export_diagram(rep);
  }
  out << "wrote " << census.representatives.size() << " diagrams to " << dir << '\n';
}

int cmd_counts(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Method method = parse_method(cfg.method);
  const Format format = parse_format(cfg.format);
  try {
    out << render_counts(count_table(cfg.max_order, method, cfg.term_budget), format, method);
  } catch (const MethodDisagreement& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  SuiteOptions opts;
  opts.max_order = cfg.max_order;
  opts.term_budget = cfg.term_budget;
  opts.oracle_override = cfg.oracle_override;
  opts.run_oracle = !cfg.no_oracle;
  opts.workers = cfg.workers;
  const auto report = run_verification_suite(opts);
  out << render_report(report, parse_format(cfg.format));
  return report.overall() ? kOk : kCheckFailed;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(cfg.format);
  const auto opts = oracle_options(cfg);
  OracleResult result;
  result.m = cfg.order;
  result.matchings = oracle::enumerate_matchings(cfg.order, opts);
  result.vacuum = oracle::enumerate_vacuum_matchings(cfg.order, opts);
  if (cfg.order <= oracle::kDefaultMaxOrder) {
    result.orbits = oracle::orbit_census(cfg.order, opts);
  } else {
    err << "note: orbit census is not run above order " << oracle::kDefaultMaxOrder << '\n';
    if (!cfg.dot_dir.empty()) {
      err << "error: --dot-dir needs the orbit census\n";
      return kInputError;
    }
  }
  out << render_oracle(result, format);
  if (!cfg.dot_dir.empty()) write_diagrams(*result.orbits, cfg.order, cfg.dot_dir, err);
  return kOk;
}

int cmd_compositions(const RunConfig& cfg, std::ostream& out) {
  if (cfg.list) {
    for (const auto& c : enumerate_compositions(cfg.n)) out << c.to_string() << '\n';
  } else {
    out << count_compositions(cfg.n) << '\n';
  }
  return kOk;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  const auto census = oracle::orbit_census(cfg.order, oracle_options(cfg));
  write_diagrams(census, cfg.order, cfg.dot_dir, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact counts of connected Feynman diagrams with a Wick-contraction oracle",
               "feyncount"};
  app.require_subcommand(1);

  const std::vector<std::string> methods{"recurrence", "closed-form", "arques-walsh", "all"};

  auto* counts = app.add_subcommand("counts", "Diagram counts for m = 0..max-order");
  counts->add_option("--max-order", cfg.max_order, "Largest order")->required();
  counts->add_option("--method", cfg.method, "recurrence | closed-form | arques-walsh | all")
      ->check(CLI::IsMember(methods));
  counts->add_option("--format", cfg.format, "table | csv | json | bfile")
      ->check(CLI::IsMember({"table", "csv", "json", "bfile"}));
  counts->add_option("--term-budget", cfg.term_budget, "Composition-term budget")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the identity and oracle verification suite");
  verify->add_option("--max-order", cfg.max_order, "Largest order checked")->required();
  verify->add_option("--format", cfg.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  verify->add_option("--term-budget", cfg.term_budget, "Composition-term budget")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--oracle-override", cfg.oracle_override, "Allow oracle order 5");
  verify->add_flag("--no-oracle", cfg.no_oracle, "Skip the brute-force oracle rows");
  verify->add_option("--workers", cfg.workers, "Oracle worker threads")->check(CLI::PositiveNumber);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force Wick contraction census");
  oracle_cmd->add_option("--order", cfg.order, "Perturbation order")->required();
  oracle_cmd->add_option("--format", cfg.format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));
  oracle_cmd->add_flag("--oracle-override", cfg.oracle_override, "Allow order 5");
  oracle_cmd->add_option("--dot-dir", cfg.dot_dir, "Write each canonical diagram as DOT here");
  oracle_cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* comps = app.add_subcommand("compositions", "Count or list compositions of n");
  comps->add_option("--n", cfg.n, "Integer to compose")
      ->required()
      ->check(CLI::Range(1u, kMaxCompositionTotal));
  comps->add_flag("--list", cfg.list, "List every composition in enumeration order");

  auto* exp = app.add_subcommand("export", "Write canonical connected diagrams as DOT files");
  exp->add_option("--order", cfg.order, "Perturbation order")->required();
  exp->add_option("--out-dir", cfg.dot_dir, "Output directory")->required();
  exp->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"feyncount"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*counts) return cmd_counts(cfg, out, err);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*oracle_cmd) return cmd_oracle(cfg, out, err);
    if (*comps) return cmd_compositions(cfg, out);
    if (*exp) return cmd_export(cfg, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --term-budget to allow it)\n";
    return kInputError;
  } catch (const oracle::OracleCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ExactnessError& e) {
    err << "internal error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kInputError;
}

}  // namespace feyncount::cli
