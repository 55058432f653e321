#include "fdrelay/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "fdrelay/analysis.hpp"
#include "fdrelay/channel.hpp"
#include "fdrelay/errors.hpp"
#include "fdrelay/model.hpp"
#include "fdrelay/phase.hpp"

namespace fdrelay {

namespace {

std::vector<double> db_range(double lo, double hi, double step) {
  std::vector<double> out;
  for (int i = 0; lo + step * i <= hi + 1e-9; ++i) out.push_back(lo + step * i);
  return out;
}

// Runs fn(0..n-1) on a small pool. Callers write to disjoint slots, so the
// result does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

Scenario as_solver_scenario(ScenarioKind s) {
  return s == ScenarioKind::coherent ? Scenario::coherent : Scenario::noncoherent;
}

ResultRow base_row(const ExperimentSpec& spec, ScenarioKind scenario, double zeta, double pmax_db,
                   double ibar_db, std::uint64_t seed, const ChannelRealization& ch) {
  ResultRow row;
  row.experiment = std::string(to_string(spec.name));
  row.scenario = std::string(to_string(scenario));
  row.zeta = zeta;
  row.ibar_db = ibar_db;
  row.pmax_db = pmax_db;
  row.seed = seed;
  row.channel_digest = ch.digest();
  return row;
}

// Solves every relay for one scenario, keeping the better of a cold start
// and a warm start from the previous (smaller) cap's allocation.
SolveResult solve_warm(const ChannelRealization& ch, const NetworkConfig& cfg, Scenario scenario,
                       const SolverOptions& opts, const std::vector<PowerAllocation>& warm) {
  std::vector<RelayResult> per;
  per.reserve(ch.num_relays());
  for (std::size_t k = 0; k < ch.num_relays(); ++k) {
    RelayResult best = solve_relay(ch, k, cfg, scenario, opts);
    if (!warm.empty() && cfg.i_bar_p > 0.0) {
      SolverOptions w = opts;
      w.init = InitStrategy::custom;
      w.custom_point = warm[k];
      RelayResult alt = solve_relay(ch, k, cfg, scenario, w);
      if (alt.rate > best.rate) best = std::move(alt);
    }
    per.push_back(std::move(best));
  }
  return select_relay(std::move(per));
}

std::vector<PowerAllocation> allocations(const SolveResult& r) {
  std::vector<PowerAllocation> out;
  for (const auto& rr : r.per_relay) out.push_back(rr.alloc);
  return out;
}

std::vector<ResultRow> run_rate_vs_ibar(const ExperimentSpec& spec, const NetworkConfig& base) {
  const std::size_t nz = spec.zeta_list.size();
  const std::size_t np = spec.pmax_db.size();
  const std::size_t ni = spec.ibar_db.size();
  const std::size_t ns = spec.scenarios.size();
  const std::size_t nr = spec.num_realizations;
  std::vector<ResultRow> rows(nz * np * ni * ns * nr);
  auto slot = [&](std::size_t z, std::size_t p, std::size_t i, std::size_t s, std::size_t r) {
    return (((z * np + p) * ni + i) * ns + s) * nr + r;
  };
  std::vector<double> ibar_sorted = spec.ibar_db;
  std::sort(ibar_sorted.begin(), ibar_sorted.end());

  parallel_for(nz * np * nr, spec.threads, [&](std::size_t task) {
    const std::size_t r = task % nr;
    const std::size_t p = (task / nr) % np;
    const std::size_t z = task / (nr * np);
    NetworkConfig cfg = base;
    cfg.num_relays = spec.num_relays;
    cfg.zeta = spec.zeta_list[z];
    cfg.set_p_max(db_to_linear(spec.pmax_db[p]));
    const std::uint64_t seed = spec.base_seed + r;
    const ChannelRealization ch = sample_channels(cfg, seed);

    for (std::size_t s = 0; s < ns; ++s) {
      const ScenarioKind kind = spec.scenarios[s];
      std::vector<PowerAllocation> warm;
      for (double ibar_db : ibar_sorted) {
        cfg.i_bar_p = db_to_linear(ibar_db);
        const SolveResult res = kind == ScenarioKind::hd_baseline
                                    ? solve_hd(ch, cfg, spec.solver)
                                    : solve_warm(ch, cfg, as_solver_scenario(kind), spec.solver, warm);
        warm = allocations(res);
        const std::size_t i = static_cast<std::size_t>(
            std::find(spec.ibar_db.begin(), spec.ibar_db.end(), ibar_db) - spec.ibar_db.begin());
        ResultRow row = base_row(spec, kind, cfg.zeta, spec.pmax_db[p], ibar_db, seed, ch);
        row.selected_relay = static_cast<long>(res.selected);
        row.rate = res.best().rate;
        row.feasible =
            kind == ScenarioKind::hd_baseline ||
            is_feasible(as_solver_scenario(kind), res.best().alloc, ch, res.selected, cfg);
        rows[slot(z, p, i, s, r)] = std::move(row);
      }
    }
  });
  return rows;
}

std::vector<ResultRow> run_optimality_gap(const ExperimentSpec& spec, const NetworkConfig& base) {
  const std::size_t nz = spec.zeta_list.size();
  const std::size_t np = spec.pmax_db.size();
  const std::size_t ni = spec.ibar_db.size();
  const std::size_t ns = spec.scenarios.size();
  const std::size_t nr = spec.num_realizations;
  std::vector<ResultRow> rows(nz * np * ni * ns * nr);
  auto slot = [&](std::size_t z, std::size_t p, std::size_t i, std::size_t s, std::size_t r) {
    return (((z * np + p) * ni + i) * ns + s) * nr + r;
  };

  parallel_for(nz * np * ni * nr, spec.threads, [&](std::size_t task) {
    const std::size_t r = task % nr;
    const std::size_t i = (task / nr) % ni;
    const std::size_t p = (task / (nr * ni)) % np;
    const std::size_t z = task / (nr * ni * np);
    NetworkConfig cfg = base;
    cfg.num_relays = spec.num_relays;
    cfg.zeta = spec.zeta_list[z];
    cfg.set_p_max(db_to_linear(spec.pmax_db[p]));
    cfg.i_bar_p = db_to_linear(spec.ibar_db[i]);
    const std::uint64_t seed = spec.base_seed + r;
    const ChannelRealization ch = sample_channels(cfg, seed);

    for (std::size_t s = 0; s < ns; ++s) {
      const ScenarioKind kind = spec.scenarios[s];
      ResultRow row = base_row(spec, kind, cfg.zeta, spec.pmax_db[p], spec.ibar_db[i], seed, ch);
      if (kind == ScenarioKind::hd_baseline) {
        const SolveResult res = solve_hd(ch, cfg, spec.solver);
        row.selected_relay = static_cast<long>(res.selected);
        row.rate = res.best().rate;
        row.feasible = true;
      } else {
        const Scenario sc = as_solver_scenario(kind);
        const SolveResult res = solve(ch, cfg, sc, spec.solver);
        const SolveResult oracle = solve_brute_force(ch, cfg, sc, spec.oracle_grid);
        row.selected_relay = static_cast<long>(res.selected);
        row.rate = res.best().rate;
        row.oracle_rate = oracle.best().rate;
        row.gap_pct = gap_percent(res.best().rate, oracle.best().rate);
        row.feasible = is_feasible(sc, res.best().alloc, ch, res.selected, cfg);
      }
      rows[slot(z, p, i, s, r)] = std::move(row);
    }
  });
  return rows;
}

// Fixed-power sweeps: the best relay's exact rate at each swept power,
// among relays that meet the scenario's interference cap there.
std::vector<ResultRow> run_power_sweep(const ExperimentSpec& spec, const NetworkConfig& base) {
  const bool sweep_relay = spec.name == ExperimentName::rate_vs_pr;
  const std::size_t nz = spec.zeta_list.size();
  const std::size_t np = spec.pmax_db.size();
  const std::size_t ni = spec.ibar_db.size();
  const std::size_t nf = spec.fixed_db.size();
  const std::size_t nw = spec.sweep_db.size();
  const std::size_t ns = spec.scenarios.size();
  const std::size_t nr = spec.num_realizations;
  std::vector<ResultRow> rows(nz * np * ni * nf * nw * ns * nr);
  auto slot = [&](std::size_t z, std::size_t p, std::size_t i, std::size_t f, std::size_t w,
                  std::size_t s, std::size_t r) {
    return (((((z * np + p) * ni + i) * nf + f) * nw + w) * ns + s) * nr + r;
  };

  parallel_for(nz * np * nr, spec.threads, [&](std::size_t task) {
    const std::size_t r = task % nr;
    const std::size_t p = (task / nr) % np;
    const std::size_t z = task / (nr * np);
    NetworkConfig cfg = base;
    cfg.num_relays = spec.num_relays;
    cfg.zeta = spec.zeta_list[z];
    cfg.set_p_max(db_to_linear(spec.pmax_db[p]));
    const std::uint64_t seed = spec.base_seed + r;
    const ChannelRealization ch = sample_channels(cfg, seed);

    for (std::size_t i = 0; i < ni; ++i) {
      cfg.i_bar_p = db_to_linear(spec.ibar_db[i]);
      for (std::size_t f = 0; f < nf; ++f) {
        for (std::size_t w = 0; w < nw; ++w) {
          const double fixed = std::min(db_to_linear(spec.fixed_db[f]), cfg.p_s_max);
          const double swept = std::min(db_to_linear(spec.sweep_db[w]), cfg.p_r_max);
          const PowerAllocation alloc = sweep_relay ? PowerAllocation{fixed, swept}
                                                    : PowerAllocation{swept, fixed};
          for (std::size_t s = 0; s < ns; ++s) {
            const ScenarioKind kind = spec.scenarios[s];
            ResultRow row =
                base_row(spec, kind, cfg.zeta, spec.pmax_db[p], spec.ibar_db[i], seed, ch);
            row.fixed_db = spec.fixed_db[f];
            row.sweep_db = spec.sweep_db[w];
            long best_k = -1;
            double best_rate = 0.0;
            for (std::size_t k = 0; k < ch.num_relays(); ++k) {
              double rate = 0.0;
              bool ok = false;
              if (kind == ScenarioKind::hd_baseline) {
                auto g = link_gains(ch, k, cfg);
                g.zeta = 0.0;
                ok = g.g_sp * alloc.p_s <= cfg.i_bar_p && g.g_rp * alloc.p_r <= cfg.i_bar_p;
                rate = 0.5 * std::log2(1.0 + kernel::sinr_exact(g, alloc.p_s, alloc.p_r));
              } else {
                ok = is_feasible(as_solver_scenario(kind), alloc, ch, k, cfg);
                rate = rate_exact(alloc, ch, k, cfg);
              }
              if (ok && (best_k < 0 || rate > best_rate)) {
                best_k = static_cast<long>(k);
                best_rate = rate;
              }
            }
            row.feasible = best_k >= 0;
            if (best_k >= 0) row.selected_relay = best_k;
            row.rate = best_rate;
            rows[slot(z, p, i, f, w, s, r)] = std::move(row);
          }
        }
      }
    }
  });
  return rows;
}

std::vector<ResultRow> run_lemma_rows(const ExperimentSpec& spec) {
  LemmaSuiteOptions opts;
  opts.seed = spec.base_seed;
  std::vector<ResultRow> rows;
  auto push = [&](const std::string& check, bool passed) {
    ResultRow row;
    row.experiment = std::string(to_string(spec.name));
    row.seed = spec.base_seed;
    row.check = check;
    row.passed = passed;
    rows.push_back(std::move(row));
  };
  for (const auto& o : run_lemma_suite(opts)) push(o.name, o.passed);
  const auto calc = check_calculus(1000, spec.base_seed);
  push("calculus", calc.failures == 0);
  return rows;
}

template <typename T>
std::string opt_cell(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_same_v<T, double>) {
    return format_float(*v);
  } else if constexpr (std::is_same_v<T, bool>) {
    return *v ? "1" : "0";
  } else {
    return std::to_string(*v);
  }
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

}  // namespace

std::string_view to_string(ExperimentName e) {
  switch (e) {
    case ExperimentName::rate_vs_ibar: return "rate-vs-ibar";
    case ExperimentName::rate_vs_pr: return "rate-vs-pr";
    case ExperimentName::rate_vs_ps: return "rate-vs-ps";
    case ExperimentName::optimality_gap: return "optimality-gap";
    case ExperimentName::lemma_suite: return "lemma-suite";
  }
  return "?";
}

std::string_view to_string(ScenarioKind s) {
  switch (s) {
    case ScenarioKind::noncoherent: return "noncoherent";
    case ScenarioKind::coherent: return "coherent";
    case ScenarioKind::hd_baseline: return "hd-baseline";
  }
  return "?";
}

ExperimentName parse_experiment(std::string_view name) {
  for (auto e : {ExperimentName::rate_vs_ibar, ExperimentName::rate_vs_pr,
                 ExperimentName::rate_vs_ps, ExperimentName::optimality_gap,
                 ExperimentName::lemma_suite})
    if (to_string(e) == name) return e;
  throw ConfigError("unknown experiment '" + std::string(name) + "'");
}

ScenarioKind parse_scenario(std::string_view name) {
  for (auto s : {ScenarioKind::noncoherent, ScenarioKind::coherent, ScenarioKind::hd_baseline})
    if (to_string(s) == name) return s;
  throw ConfigError("unknown scenario '" + std::string(name) + "'");
}

ExperimentSpec ExperimentSpec::defaults(ExperimentName name) {
  ExperimentSpec s;
  s.name = name;
  switch (name) {
    case ExperimentName::rate_vs_ibar:
      s.ibar_db = {0, 2, 4, 6, 8, 10};
      s.pmax_db = {10, 15, 20, 25};
      s.zeta_list = {0.0, 0.001, 0.01, 0.4};
      s.scenarios = {ScenarioKind::noncoherent, ScenarioKind::coherent, ScenarioKind::hd_baseline};
      s.num_relays = 8;
      break;
    case ExperimentName::rate_vs_pr:
    case ExperimentName::rate_vs_ps:
      s.ibar_db = {8};
      s.pmax_db = {25};
      s.fixed_db = {5};
      s.sweep_db = db_range(-10, 25, 1);
      s.zeta_list = {0.0, 0.001, 0.01, 0.4};
      s.scenarios = {ScenarioKind::noncoherent, ScenarioKind::coherent, ScenarioKind::hd_baseline};
      s.num_relays = 10;
      break;
    case ExperimentName::optimality_gap:
      s.ibar_db = {0, 2, 4, 6, 8, 10};
      s.pmax_db = {20};
      s.zeta_list = {0.001};
      s.scenarios = {ScenarioKind::coherent, ScenarioKind::noncoherent};
      s.num_relays = 1;
      s.num_realizations = 100;
      break;
    case ExperimentName::lemma_suite:
      s.num_realizations = 1;
      break;
  }
  return s;
}

void ExperimentSpec::validate() const {
  if (num_realizations < 1) throw ConfigError("num_realizations must be >= 1");
  if (name == ExperimentName::lemma_suite) return;
  if (num_relays < 1) throw ConfigError("num_relays must be >= 1");
  auto nonempty = [](const auto& v, const char* what) {
    if (v.empty()) throw ConfigError(std::string(what) + " sweep must not be empty");
  };
  nonempty(ibar_db, "ibar_db");
  nonempty(pmax_db, "pmax_db");
  nonempty(zeta_list, "zeta");
  nonempty(scenarios, "scenario");
  if (name == ExperimentName::rate_vs_pr || name == ExperimentName::rate_vs_ps) {
    nonempty(fixed_db, "fixed_db");
    nonempty(sweep_db, "sweep_db");
  }
  for (double z : zeta_list)
    if (!(z >= 0.0)) throw ConfigError("zeta values must be >= 0");
  if (oracle_grid < 2) throw ConfigError("oracle grid must be >= 2");
  solver.validate();
}

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec, const NetworkConfig& base) {
  spec.validate();
  base.validate();
  switch (spec.name) {
    case ExperimentName::rate_vs_ibar: return run_rate_vs_ibar(spec, base);
    case ExperimentName::rate_vs_pr:
    case ExperimentName::rate_vs_ps: return run_power_sweep(spec, base);
    case ExperimentName::optimality_gap: return run_optimality_gap(spec, base);
    case ExperimentName::lemma_suite: return run_lemma_rows(spec);
  }
  return {};
}

double gap_percent(double solved, double oracle) {
  return oracle > 0.0 ? 100.0 * (oracle - solved) / oracle : 0.0;
}

std::string format_float(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string csv_header() {
  return "experiment,scenario,zeta,ibar_db,pmax_db,fixed_db,sweep_db,seed,channel_digest,"
         "selected_relay,rate,oracle_rate,gap_pct,feasible,check,passed";
}

std::string to_csv_line(const ResultRow& row) {
  std::string line = row.experiment;
  for (const std::string& v :
       {row.scenario, opt_cell(row.zeta), opt_cell(row.ibar_db), opt_cell(row.pmax_db),
        opt_cell(row.fixed_db), opt_cell(row.sweep_db), opt_cell(row.seed),
        row.channel_digest ? hex64(*row.channel_digest) : std::string(),
        opt_cell(row.selected_relay), opt_cell(row.rate), opt_cell(row.oracle_rate),
        opt_cell(row.gap_pct), opt_cell(row.feasible), row.check, opt_cell(row.passed)}) {
    line += ',';
    line += v;
  }
  return line;
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << csv_header() << '\n';
  for (const auto& row : rows) out << to_csv_line(row) << '\n';
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_csv(rows, out);
  out.flush();
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<GapCell> summarize_gap(const std::vector<ResultRow>& rows) {
  std::vector<GapCell> cells;
  for (const auto& row : rows) {
    if (!row.gap_pct || !row.ibar_db || !row.rate || !row.oracle_rate) continue;
    auto it = std::find_if(cells.begin(), cells.end(), [&](const GapCell& c) {
      return c.scenario == row.scenario && c.ibar_db == *row.ibar_db;
    });
    if (it == cells.end()) {
      cells.push_back({row.scenario, *row.ibar_db, 0, 0.0, 0.0, 0.0, -1e300});
      it = cells.end() - 1;
    }
    ++it->count;
    it->mean_rate += *row.rate;
    it->mean_oracle += *row.oracle_rate;
    it->mean_gap_pct += *row.gap_pct;
    it->max_gap_pct = std::max(it->max_gap_pct, *row.gap_pct);
  }
  for (auto& c : cells) {
    c.mean_rate /= c.count;
    c.mean_oracle /= c.count;
    c.mean_gap_pct /= c.count;
  }
  return cells;
}

std::string format_gap_table(const std::vector<GapCell>& cells) {
  std::vector<std::string> scenarios;
  for (const auto& c : cells)
    if (std::find(scenarios.begin(), scenarios.end(), c.scenario) == scenarios.end())
      scenarios.push_back(c.scenario);

  std::ostringstream os;
  char buf[64];
  for (const auto& sc : scenarios) {
    std::vector<const GapCell*> row;
    for (const auto& c : cells)
      if (c.scenario == sc) row.push_back(&c);
    os << sc << '\n';
    os << "  I_P (dB)     ";
    for (auto* c : row) {
      std::snprintf(buf, sizeof buf, "%10g", c->ibar_db);
      os << buf;
    }
    auto line = [&](const char* label, auto get) {
      os << '\n' << label;
      for (auto* c : row) {
        std::snprintf(buf, sizeof buf, "%10.4f", get(*c));
        os << buf;
      }
    };
    line("  Optimal      ", [](const GapCell& c) { return c.mean_oracle; });
    line("  Alternating  ", [](const GapCell& c) { return c.mean_rate; });
    line("  gap mean (%) ", [](const GapCell& c) { return c.mean_gap_pct; });
    line("  gap max (%)  ", [](const GapCell& c) { return c.max_gap_pct; });
    os << "\n\n";
  }
  return os.str();
}

}  // namespace fdrelay
