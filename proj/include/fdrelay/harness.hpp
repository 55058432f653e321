#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdrelay/config.hpp"
#include "fdrelay/solver.hpp"

namespace fdrelay {

enum class ExperimentName { rate_vs_ibar, rate_vs_pr, rate_vs_ps, optimality_gap, lemma_suite };

enum class ScenarioKind { noncoherent, coherent, hd_baseline };

std::string_view to_string(ExperimentName e);
std::string_view to_string(ScenarioKind s);
ExperimentName parse_experiment(std::string_view name);
ScenarioKind parse_scenario(std::string_view name);

struct ExperimentSpec {
  ExperimentName name = ExperimentName::rate_vs_ibar;
  std::vector<double> ibar_db;
  std::vector<double> pmax_db;
  std::vector<double> fixed_db;  ///< fixed P_S (rate-vs-pr) or P_R (rate-vs-ps)
  std::vector<double> sweep_db;  ///< swept P_R (rate-vs-pr) or P_S (rate-vs-ps)
  std::vector<double> zeta_list;
  std::vector<ScenarioKind> scenarios;
  std::size_t num_relays = 8;
  std::size_t num_realizations = 200;
  std::uint64_t base_seed = 1;
  int oracle_grid = 201;
  SolverOptions solver{};
  unsigned threads = 0;  ///< 0 = hardware concurrency

  /// Preset sweeps for each experiment.
  static ExperimentSpec defaults(ExperimentName name);
  void validate() const;
};

/// One CSV line. Absent optionals are written as empty cells.
struct ResultRow {
  std::string experiment;
  std::string scenario;
  std::optional<double> zeta;
  std::optional<double> ibar_db;
  std::optional<double> pmax_db;
  std::optional<double> fixed_db;
  std::optional<double> sweep_db;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> channel_digest;
  std::optional<long> selected_relay;
  std::optional<double> rate;
  std::optional<double> oracle_rate;
  std::optional<double> gap_pct;
  std::optional<bool> feasible;
  std::string check;
  std::optional<bool> passed;
};

/// Rows in zeta, P_max, I_P, fixed, sweep, scenario, seed order. Realization
/// r uses seed base_seed + r, so every scenario and cap sees the same channels.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec, const NetworkConfig& base);

/// 100 (oracle - solved) / oracle, or 0 when the oracle rate is 0.
double gap_percent(double solved, double oracle);

/// Six significant digits, "%.6g".
std::string format_float(double v);

std::string csv_header();
std::string to_csv_line(const ResultRow& row);
void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);
/// Throws IoError naming the path.
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);

struct GapCell {
  std::string scenario;
  double ibar_db = 0.0;
  std::size_t count = 0;
  double mean_rate = 0.0;
  double mean_oracle = 0.0;
  double mean_gap_pct = 0.0;
  double max_gap_pct = 0.0;
};

/// Per (scenario, I_P) aggregates of optimality-gap rows, in first-seen order.
std::vector<GapCell> summarize_gap(const std::vector<ResultRow>& rows);

/// Table-1 style text: Optimal, Greedy and gap rows per scenario.
std::string format_gap_table(const std::vector<GapCell>& cells);

}  // namespace fdrelay
