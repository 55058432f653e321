#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "fdrelay/channel.hpp"
#include "fdrelay/config.hpp"
#include "fdrelay/interval.hpp"
#include "fdrelay/model.hpp"

namespace fdrelay {

enum class Scenario { noncoherent, coherent };

/// What each 1-D subproblem maximizes. The reported rate is always the exact one.
enum class Objective { exact_rate, surrogate };

/// Coherent only: which constraint shapes the 1-D feasible intervals.
enum class ConstraintModel { exact, convexified };

enum class InitStrategy { max_power_scaled, midpoint, custom };

enum class AlternationOrder { relay_first, source_first };

struct SolverOptions {
  int max_outer_iters = 50;
  double obj_tol = 1e-6;   ///< relative improvement that stops the outer loop
  double var_tol = 1e-9;   ///< 1-D solve tolerance
  int grid_n = 201;        ///< oracle lattice points per axis
  InitStrategy init = InitStrategy::max_power_scaled;
  PowerAllocation custom_point{};
  Objective objective = Objective::exact_rate;
  ConstraintModel constraint = ConstraintModel::exact;
  AlternationOrder order = AlternationOrder::relay_first;
  bool ridge_step = true;  ///< search along the active constraint after the axis steps
  int scan_points = 64;    ///< coherent feasibility scan resolution

  void validate() const;
};

struct TracePoint {
  int iteration = 0;
  double objective = 0.0;
};

struct RelayResult {
  std::size_t relay = 0;
  PowerAllocation alloc{};
  double rate = 0.0;       ///< exact achievable rate at alloc
  double objective = 0.0;  ///< value of the optimized objective
  double surrogate = 0.0;  ///< surrogate objective at alloc
  int iterations = 0;
  bool converged = false;
  std::vector<TracePoint> trace;
};

struct SolveResult {
  std::vector<RelayResult> per_relay;
  std::size_t selected = 0;

  [[nodiscard]] const RelayResult& best() const { return per_relay.at(selected); }
};

/// Maximizes a unimodal function by golden-section search, comparing the
/// result against both endpoints. Throws EmptyInterval.
std::pair<double, double> solve_1d_convex(const std::function<double(double)>& objective,
                                          Interval interval, double tol);

/// Interference under the scenario's exact constraint.
double interference(Scenario scenario, const PowerAllocation& alloc, const ChannelRealization& ch,
                    std::size_t k, const NetworkConfig& cfg);

/// Exact constraint and box check, with a 1e-9 relative slack on the cap.
bool is_feasible(Scenario scenario, const PowerAllocation& alloc, const ChannelRealization& ch,
                 std::size_t k, const NetworkConfig& cfg);

/// All components of {P_R : (p_s, P_R) feasible} in linear power. The
/// coherent set can be a union because the relay may cancel the source.
std::vector<Interval> feasible_relay_set(double p_s, const ChannelRealization& ch, std::size_t k,
                                         const NetworkConfig& cfg, Scenario scenario,
                                         int scan_points = 64);

/// Uppermost component of feasible_relay_set. Throws Infeasible if empty.
Interval feasible_interval_pr(double p_s, const ChannelRealization& ch, std::size_t k,
                              const NetworkConfig& cfg, Scenario scenario, int scan_points = 64);

/// Surrogate objective of the scenario (high-SNR / p_R^2 forms when zeta_hat = 0).
double surrogate_objective(Scenario scenario, const PowerAllocation& alloc,
                           const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg);

RelayResult alternate_optimize(const ChannelRealization& ch, std::size_t k,
                               const NetworkConfig& cfg, Scenario scenario,
                               const SolverOptions& opts = {});

RelayResult solve_zeta_zero(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                            Scenario scenario, const SolverOptions& opts = {});

/// Exact rate maximized over a grid_n x grid_n lattice of linear powers.
RelayResult brute_force(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                        Scenario scenario, int grid_n);

/// Half-duplex comparator: half the exact rate without self-interference,
/// with each hop's interference capped in its own slot.
RelayResult hd_baseline(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                        const SolverOptions& opts = {});

SolveResult select_relay(std::vector<RelayResult> per_relay);

/// alternate_optimize, or solve_zeta_zero when zeta_hat = 0.
RelayResult solve_relay(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                        Scenario scenario, const SolverOptions& opts = {});

/// solve_relay for every relay, then select_relay.
SolveResult solve(const ChannelRealization& ch, const NetworkConfig& cfg, Scenario scenario,
                  const SolverOptions& opts = {});

SolveResult solve_hd(const ChannelRealization& ch, const NetworkConfig& cfg,
                     const SolverOptions& opts = {});

SolveResult solve_brute_force(const ChannelRealization& ch, const NetworkConfig& cfg,
                              Scenario scenario, int grid_n);

}  // namespace fdrelay
