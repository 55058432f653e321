// Command-line front end: experiment runs, the lemma suite, and the
// Table-1 style optimality-gap report.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdrelay/analysis.hpp"
#include "fdrelay/config.hpp"
#include "fdrelay/errors.hpp"
#include "fdrelay/harness.hpp"

namespace {

using namespace fdrelay;

struct SweepOverrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> realizations;
  std::optional<std::size_t> relays;
  std::vector<double> zeta;
  std::vector<double> ibar_db;
  std::vector<double> pmax_db;
  std::optional<int> grid;
  unsigned threads = 0;

  void attach(CLI::App& cmd) {
    cmd.add_option("--config", config_path, "key=value network config file")
        ->check(CLI::ExistingFile);
    cmd.add_option("--seed", seed, "base seed; realization r uses seed + r");
    cmd.add_option("--realizations", realizations, "Monte-Carlo realizations")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--relays", relays, "number of relays K")->check(CLI::PositiveNumber);
    cmd.add_option("--zeta", zeta, "self-interference levels")->delimiter(',');
    cmd.add_option("--ibar-db", ibar_db, "interference caps in dB")->delimiter(',');
    cmd.add_option("--pmax-db", pmax_db, "power caps in dB")->delimiter(',');
    cmd.add_option("--grid", grid, "oracle grid points per axis")->check(CLI::Range(2, 100000));
    cmd.add_option("--threads", threads, "worker threads (0 = all cores)");
  }

  void apply(ExperimentSpec& spec) const {
    if (seed) spec.base_seed = *seed;
    if (realizations) spec.num_realizations = *realizations;
    if (relays) spec.num_relays = *relays;
    if (!zeta.empty()) spec.zeta_list = zeta;
    if (!ibar_db.empty()) spec.ibar_db = ibar_db;
    if (!pmax_db.empty()) spec.pmax_db = pmax_db;
    if (grid) spec.oracle_grid = *grid;
    spec.threads = threads;
  }

  NetworkConfig network() const {
    return config_path.empty() ? NetworkConfig{} : load_config(config_path);
  }
};

int cmd_run(const std::string& experiment, const SweepOverrides& ov, const std::string& out) {
  ExperimentSpec spec = ExperimentSpec::defaults(parse_experiment(experiment));
  ov.apply(spec);
  const auto rows = run_experiment(spec, ov.network());
  if (out.empty() || out == "-") {
    write_csv(rows, std::cout);
  } else {
    emit_csv(rows, out);
    std::fprintf(stderr, "wrote %zu rows to %s\n", rows.size(), out.c_str());
  }
  return 0;
}

int cmd_verify(std::uint64_t seed) {
  LemmaSuiteOptions opts;
  opts.seed = seed;
  bool all = true;
  for (const auto& o : run_lemma_suite(opts)) {
    std::printf("%s %-10s %zu checked, %zu failed%s%s\n", o.passed ? "PASS" : "FAIL",
                o.name.c_str(), o.checked, o.failures, o.detail.empty() ? "" : ", ",
                o.detail.c_str());
    all = all && o.passed;
  }
  const auto calc = check_calculus(1000, seed);
  const bool calc_ok = calc.failures == 0;
  std::printf("%s %-10s %zu checked, %zu failed, worst %.3g of tolerance (%s)\n",
              calc_ok ? "PASS" : "FAIL", "calculus", calc.checked, calc.failures,
              calc.worst_ratio, calc.worst_quantity.c_str());
  return all && calc_ok ? 0 : 1;
}

int cmd_oracle_gap(const SweepOverrides& ov, const std::string& out) {
  ExperimentSpec spec = ExperimentSpec::defaults(ExperimentName::optimality_gap);
  ov.apply(spec);
  const auto rows = run_experiment(spec, ov.network());
  if (!out.empty()) emit_csv(rows, out);
  std::printf("Achievable rate vs I_P (K = %zu, P_max = %g dB, zeta = %g, %zu realizations, "
              "oracle grid %d)\n\n",
              spec.num_relays, spec.pmax_db.front(), spec.zeta_list.front(),
              spec.num_realizations, spec.oracle_grid);
  std::fputs(format_gap_table(summarize_gap(rows)).c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power control and relay selection for full-duplex cognitive relay networks"};
  app.require_subcommand(1);

  std::string experiment;
  std::string run_out;
  SweepOverrides run_ov;
  auto* run = app.add_subcommand("run", "run an experiment and write CSV");
  run->add_option("--experiment", experiment,
                  "rate-vs-ibar | rate-vs-pr | rate-vs-ps | optimality-gap | lemma-suite")
      ->required();
  run->add_option("--out", run_out, "CSV path ('-' for stdout)");
  run_ov.attach(*run);

  std::uint64_t verify_seed = LemmaSuiteOptions{}.seed;
  auto* verify = app.add_subcommand("verify", "run the lemma suite");
  verify->add_option("--seed", verify_seed, "random seed");

  std::string gap_out;
  SweepOverrides gap_ov;
  auto* gap = app.add_subcommand("oracle-gap", "alternating solver versus brute-force oracle");
  gap->add_option("--out", gap_out, "also write the per-realization CSV here");
  gap_ov.attach(*gap);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(experiment, run_ov, run_out);
    if (*verify) return cmd_verify(verify_seed);
    if (*gap) return cmd_oracle_gap(gap_ov, gap_out);
  } catch (const fdrelay::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
