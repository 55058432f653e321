#include "fdrelay/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fdrelay/errors.hpp"
#include "fdrelay/phase.hpp"

namespace fdrelay {

namespace {

constexpr double kInvPhi = 0.6180339887498949;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kCapSlack = 1e-9;

using Pred = std::function<bool(double)>;

// Shrinks [good, bad] onto the boundary of pred; returns the good side.
double bisect_boundary(const Pred& pred, double good, double bad) {
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (good + bad);
    if (mid == good || mid == bad) break;
    (pred(mid) ? good : bad) = mid;
  }
  return good;
}

// Maximal runs of pred over [lo, hi], located on an (n+1)-point scan and
// refined by bisection at every feasible/infeasible transition.
std::vector<Interval> scan_segments(const Pred& pred, double lo, double hi, int n) {
  std::vector<Interval> out;
  if (!(lo <= hi)) return out;
  if (hi == lo) {
    if (pred(lo)) out.push_back({lo, lo});
    return out;
  }
  const double step = (hi - lo) / n;
  auto at = [&](int i) { return i == n ? hi : lo + step * i; };
  bool prev_ok = pred(lo);
  double seg_lo = lo;
  for (int i = 1; i <= n; ++i) {
    const double t = at(i);
    const bool ok = pred(t);
    if (ok && !prev_ok) seg_lo = bisect_boundary(pred, t, at(i - 1));
    if (!ok && prev_ok) out.push_back({seg_lo, bisect_boundary(pred, at(i - 1), t)});
    prev_ok = ok;
  }
  if (prev_ok) out.push_back({seg_lo, hi});
  return out;
}

// Largest t in [0, hi] with pred(t), scanning down from hi. NaN if none.
double largest_feasible(const Pred& pred, double hi, int n) {
  if (pred(hi)) return hi;
  double above = hi;
  for (int j = 1; j <= n; ++j) {
    const double t = j == n ? 0.0 : hi * (1.0 - static_cast<double>(j) / n);
    if (pred(t)) return bisect_boundary(pred, t, above);
    above = t;
  }
  return kNaN;
}

struct Point {
  double s = 0.0;
  double r = 0.0;
};

enum class Axis { source, relay };

double& coord(Point& p, Axis a) { return a == Axis::source ? p.s : p.r; }

// One per-relay optimization problem in working coordinates (linear powers
// for the non-coherent scenario, amplitudes for the coherent one).
struct Problem {
  double max_s = 0.0;
  double max_r = 0.0;
  std::function<double(Point)> objective;
  std::function<bool(Point)> feasible;
  std::function<std::vector<Interval>(Axis, Point)> segments;
  std::function<double(double)> ridge_top;  // largest feasible s at relay coordinate r
  std::function<PowerAllocation(Point)> power;
};

struct EngineOutput {
  Point x;
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<TracePoint> trace;
};

double max_along_segments(const Problem& pb, const std::vector<Interval>& segs, Axis axis,
                          Point& x, double tol) {
  double best = kNegInf;
  Point best_x = x;
  for (const Interval& seg : segs) {
    auto along = [&](double t) {
      Point p = x;
      coord(p, axis) = t;
      return pb.objective(p);
    };
    const auto [arg, val] = solve_1d_convex(along, seg, tol);
    if (val > best) {
      best = val;
      best_x = x;
      coord(best_x, axis) = arg;
    }
  }
  x = best_x;
  return best;
}

double ridge_search(const Problem& pb, Point& x, int scan, double tol) {
  auto profile = [&](double r) {
    const double s = pb.ridge_top(r);
    return std::isnan(s) ? kNegInf : pb.objective({s, r});
  };
  std::vector<double> rs(scan + 1), vals(scan + 1);
  for (int i = 0; i <= scan; ++i) {
    rs[i] = i == scan ? pb.max_r : pb.max_r * i / scan;
    vals[i] = profile(rs[i]);
  }
  std::vector<int> peaks;
  for (int i = 0; i <= scan; ++i) {
    if (vals[i] == kNegInf) continue;
    const bool left = i == 0 || vals[i] >= vals[i - 1];
    const bool right = i == scan || vals[i] >= vals[i + 1];
    if (left && right) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](int a, int b) { return vals[a] > vals[b]; });
  if (peaks.size() > 3) peaks.resize(3);

  double best = kNegInf;
  double best_r = 0.0;
  for (int i : peaks) {
    const Interval around{rs[std::max(i - 1, 0)], rs[std::min(i + 1, scan)]};
    const auto [arg, val] = solve_1d_convex(profile, around, tol);
    if (val > best) {
      best = val;
      best_r = arg;
    }
  }
  if (best == kNegInf) return best;
  x = {pb.ridge_top(best_r), best_r};
  return best;
}

Point scale_to_feasible(const Problem& pb, Point target, int scan) {
  if (pb.feasible(target)) return target;
  const double t = largest_feasible(
      [&](double u) { return pb.feasible({u * target.s, u * target.r}); }, 1.0, scan);
  if (std::isnan(t)) return {0.0, 0.0};
  return {t * target.s, t * target.r};
}

EngineOutput run_alternation(const Problem& pb, Point x, const SolverOptions& opts) {
  EngineOutput out;
  double cur = pb.objective(x);
  out.trace.push_back({0, cur});
  const Axis first = opts.order == AlternationOrder::relay_first ? Axis::relay : Axis::source;
  const Axis second = first == Axis::relay ? Axis::source : Axis::relay;

  for (int it = 1; it <= opts.max_outer_iters; ++it) {
    const double prev = cur;
    for (Axis axis : {first, second}) {
      Point cand = x;
      const double val = max_along_segments(pb, pb.segments(axis, x), axis, cand, opts.var_tol);
      if (val > cur) {
        cur = val;
        x = cand;
      }
    }
    if (opts.ridge_step) {
      Point cand = x;
      const double val = ridge_search(pb, cand, opts.scan_points, opts.var_tol);
      if (val > cur) {
        cur = val;
        x = cand;
      }
    }
    out.trace.push_back({it, cur});
    out.iterations = it;
    if (cur - prev <= opts.obj_tol * std::max(std::abs(prev), 1e-300)) {
      out.converged = true;
      break;
    }
  }
  if (!pb.feasible(x)) x = scale_to_feasible(pb, x, opts.scan_points);
  out.x = x;
  out.objective = pb.objective(x);
  return out;
}

Point initial_point(const Problem& pb, const SolverOptions& opts, bool amplitude) {
  Point target{pb.max_s, pb.max_r};
  if (opts.init == InitStrategy::midpoint) {
    target = {0.5 * pb.max_s, 0.5 * pb.max_r};
  } else if (opts.init == InitStrategy::custom) {
    const auto& c = opts.custom_point;
    target = amplitude ? Point{std::sqrt(c.p_s), std::sqrt(c.p_r)} : Point{c.p_s, c.p_r};
    target.s = std::clamp(target.s, 0.0, pb.max_s);
    target.r = std::clamp(target.r, 0.0, pb.max_r);
  }
  return scale_to_feasible(pb, target, opts.scan_points);
}

bool within_cap(double interference, double cap) { return interference <= cap * (1.0 + 1e-12); }

// Closed-form non-coherent interval of one power given the other.
Interval noncoh_interval(double other, double own_coeff, double other_coeff, double cap,
                         double box) {
  const double room = cap - other_coeff * other;
  if (room < 0.0) return {1.0, 0.0};
  if (own_coeff == 0.0) return {0.0, box};
  return {0.0, std::min(box, room / own_coeff)};
}

Problem make_fd_problem(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                        Scenario scenario, const SolverOptions& opts, bool use_surrogate) {
  const auto g = link_gains(ch, k, cfg);
  const double cap = cfg.i_bar_p;
  const bool zeta_zero = g.zeta_hat() == 0.0;
  Problem pb;

  if (scenario == Scenario::noncoherent) {
    pb.max_s = cfg.p_s_max;
    pb.max_r = cfg.p_r_max;
    pb.power = [](Point x) { return PowerAllocation{x.s, x.r}; };
    const double cs = g.g_sp;
    const double cr = g.g_rp * (1.0 + g.zeta);
    pb.feasible = [=](Point x) {
      return x.s >= 0.0 && x.r >= 0.0 && x.s <= cfg.p_s_max && x.r <= cfg.p_r_max &&
             within_cap(kernel::interference_noncoh(g, x.s, x.r), cap);
    };
    pb.segments = [=](Axis axis, Point x) {
      const Interval iv = axis == Axis::relay ? noncoh_interval(x.s, cr, cs, cap, cfg.p_r_max)
                                              : noncoh_interval(x.r, cs, cr, cap, cfg.p_s_max);
      return iv.empty() ? std::vector<Interval>{} : std::vector<Interval>{iv};
    };
    pb.ridge_top = [=](double r) {
      const Interval iv = noncoh_interval(r, cs, cr, cap, cfg.p_s_max);
      return iv.empty() ? kNaN : iv.hi;
    };
  } else {
    const double max_s = std::sqrt(cfg.p_s_max);
    const double max_r = std::sqrt(cfg.p_r_max);
    pb.max_s = max_s;
    pb.max_r = max_r;
    pb.power = [](Point x) { return PowerAllocation{x.s * x.s, x.r * x.r}; };
    pb.feasible = [=, &ch](Point x) {
      return x.s >= 0.0 && x.r >= 0.0 && x.s <= max_s && x.r <= max_r &&
             within_cap(interference_coh({x.s * x.s, x.r * x.r}, ch, k, cfg), cap);
    };
    const int scan = opts.scan_points;
    const bool convexified = opts.constraint == ConstraintModel::convexified;
    const auto feasible = pb.feasible;
    pb.segments = [=, &ch](Axis axis, Point x) {
      const double box = axis == Axis::source ? max_s : max_r;
      auto pred = [&](double t) {
        Point p = x;
        coord(p, axis) = t;
        return feasible(p);
      };
      Interval window{0.0, box};
      if (convexified) {
        const auto frozen = freeze_convexified({x.s * x.s, x.r * x.r}, ch, k, cfg);
        const double hr = ch.h_sp.real();
        const double hi = ch.h_sp.imag();
        // (a t + c1)^2 + (b t + c2)^2 <= cap along the free coordinate
        const double a = axis == Axis::source ? hr : frozen.f1;
        const double b = axis == Axis::source ? hi : frozen.f2;
        const double c1 = axis == Axis::source ? frozen.f1 * x.r : hr * x.s;
        const double c2 = axis == Axis::source ? frozen.f2 * x.r : hi * x.s;
        const double qa = a * a + b * b;
        const double qb = 2.0 * (a * c1 + b * c2);
        const double qc = c1 * c1 + c2 * c2 - cap;
        if (qa == 0.0) {
          if (qc > 0.0) return std::vector<Interval>{};
        } else {
          const double disc = qb * qb - 4.0 * qa * qc;
          if (disc < 0.0) return std::vector<Interval>{};
          const double sq = std::sqrt(disc);
          window = {std::max(0.0, (-qb - sq) / (2.0 * qa)), std::min(box, (-qb + sq) / (2.0 * qa))};
          if (window.empty()) return std::vector<Interval>{};
        }
      }
      return scan_segments(pred, window.lo, window.hi, scan);
    };
    pb.ridge_top = [=](double r) {
      return largest_feasible([&](double s) { return feasible({s, r}); }, max_s, scan);
    };
  }

  const bool coherent = scenario == Scenario::coherent;
  if (!use_surrogate) {
    pb.objective = [=](Point x) {
      const PowerAllocation a = coherent ? PowerAllocation{x.s * x.s, x.r * x.r}
                                         : PowerAllocation{x.s, x.r};
      return std::log2(1.0 + kernel::sinr_exact(g, a.p_s, a.p_r));
    };
  } else if (!zeta_zero) {
    pb.objective = [=](Point x) {
      return coherent ? kernel::sinr_noncoh_surrogate(g, x.s * x.s, x.r * x.r)
                      : kernel::sinr_noncoh_surrogate(g, x.s, x.r);
    };
  } else if (!coherent) {
    pb.objective = [=](Point x) { return kernel::sinr_high_snr(g, x.s, x.r); };
  } else {
    pb.objective = [=](Point x) { return g.g_rd * x.r * x.r / g.sigma2_d; };
  }
  return pb;
}

RelayResult finish(const EngineOutput& eo, const Problem& pb, const ChannelRealization& ch,
                   std::size_t k, const NetworkConfig& cfg, Scenario scenario) {
  RelayResult r;
  r.relay = k;
  r.alloc = pb.power(eo.x);
  r.alloc.p_s = std::min(r.alloc.p_s, cfg.p_s_max);
  r.alloc.p_r = std::min(r.alloc.p_r, cfg.p_r_max);
  r.rate = rate_exact(r.alloc, ch, k, cfg);
  r.objective = eo.objective;
  r.surrogate = surrogate_objective(scenario, r.alloc, ch, k, cfg);
  r.iterations = eo.iterations;
  r.converged = eo.converged;
  r.trace = eo.trace;
  return r;
}

RelayResult zero_result(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                        Scenario scenario) {
  RelayResult r;
  r.relay = k;
  r.surrogate = surrogate_objective(scenario, r.alloc, ch, k, cfg);
  r.converged = true;
  r.trace.push_back({0, 0.0});
  return r;
}

}  // namespace

void SolverOptions::validate() const {
  if (max_outer_iters < 1) throw ConfigError("max_outer_iters must be >= 1");
  if (!(obj_tol > 0.0) || !(var_tol > 0.0)) throw ConfigError("solver tolerances must be > 0");
  if (grid_n < 2) throw ConfigError("grid_n must be >= 2");
  if (scan_points < 2) throw ConfigError("scan_points must be >= 2");
}

std::pair<double, double> solve_1d_convex(const std::function<double(double)>& objective,
                                          Interval interval, double tol) {
  if (interval.empty()) throw EmptyInterval("solve_1d_convex: empty interval");
  double a = interval.lo;
  double b = interval.hi;
  double best_x = a;
  double best_v = objective(a);
  if (b > a) {
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    while (b - a > tol) {
      if (fc >= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        if (c == d) break;
        fc = objective(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        if (c == d) break;
        fd = objective(d);
      }
    }
    const double mid = fc >= fd ? c : d;
    const double mid_v = std::max(fc, fd);
    const double hi_v = objective(interval.hi);
    if (mid_v >= best_v) {
      best_x = mid;
      best_v = mid_v;
    }
    if (hi_v > best_v) {
      best_x = interval.hi;
      best_v = hi_v;
    }
  }
  return {best_x, best_v};
}

double interference(Scenario scenario, const PowerAllocation& alloc, const ChannelRealization& ch,
                    std::size_t k, const NetworkConfig& cfg) {
  return scenario == Scenario::coherent ? interference_coh(alloc, ch, k, cfg)
                                        : interference_noncoh(alloc, ch, k, cfg);
}

bool is_feasible(Scenario scenario, const PowerAllocation& alloc, const ChannelRealization& ch,
                 std::size_t k, const NetworkConfig& cfg) {
  if (alloc.p_s < 0.0 || alloc.p_r < 0.0 || alloc.p_s > cfg.p_s_max || alloc.p_r > cfg.p_r_max)
    return false;
  return interference(scenario, alloc, ch, k, cfg) <=
         cfg.i_bar_p + kCapSlack * std::max(1.0, cfg.i_bar_p);
}

std::vector<Interval> feasible_relay_set(double p_s, const ChannelRealization& ch, std::size_t k,
                                         const NetworkConfig& cfg, Scenario scenario,
                                         int scan_points) {
  if (scenario == Scenario::noncoherent) {
    const auto g = link_gains(ch, k, cfg);
    const Interval iv =
        noncoh_interval(p_s, g.g_rp * (1.0 + g.zeta), g.g_sp, cfg.i_bar_p, cfg.p_r_max);
    return iv.empty() ? std::vector<Interval>{} : std::vector<Interval>{iv};
  }
  auto pred = [&](double amp) {
    return within_cap(interference_coh({p_s, amp * amp}, ch, k, cfg), cfg.i_bar_p);
  };
  auto segs = scan_segments(pred, 0.0, std::sqrt(cfg.p_r_max), scan_points);
  for (Interval& s : segs) s = {s.lo * s.lo, std::min(s.hi * s.hi, cfg.p_r_max)};
  return segs;
}

Interval feasible_interval_pr(double p_s, const ChannelRealization& ch, std::size_t k,
                              const NetworkConfig& cfg, Scenario scenario, int scan_points) {
  const auto segs = feasible_relay_set(p_s, ch, k, cfg, scenario, scan_points);
  if (segs.empty()) throw Infeasible("no feasible relay power at the given source power");
  return segs.back();
}

double surrogate_objective(Scenario scenario, const PowerAllocation& alloc,
                           const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg) {
  if (zeta_hat(ch, k, cfg) > 0.0) return rate_noncoh_obj(alloc, ch, k, cfg);
  if (scenario == Scenario::noncoherent) return rate_high_snr_obj(alloc, ch, k, cfg);
  return rate_coh_zeta_zero_obj(SqrtPower::from(alloc), ch, k, cfg);
}

RelayResult alternate_optimize(const ChannelRealization& ch, std::size_t k,
                               const NetworkConfig& cfg, Scenario scenario,
                               const SolverOptions& opts) {
  opts.validate();
  if (zeta_hat(ch, k, cfg) == 0.0) throw ZetaHatZero();
  if (cfg.i_bar_p == 0.0) return zero_result(ch, k, cfg, scenario);
  const bool surrogate = opts.objective == Objective::surrogate;
  const Problem pb = make_fd_problem(ch, k, cfg, scenario, opts, surrogate);
  const Point x0 = initial_point(pb, opts, scenario == Scenario::coherent);
  return finish(run_alternation(pb, x0, opts), pb, ch, k, cfg, scenario);
}

RelayResult solve_zeta_zero(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                            Scenario scenario, const SolverOptions& opts) {
  opts.validate();
  if (zeta_hat(ch, k, cfg) != 0.0)
    throw DomainError("solve_zeta_zero requires zeta_hat == 0");
  if (cfg.i_bar_p == 0.0) return zero_result(ch, k, cfg, scenario);
  const bool surrogate = opts.objective == Objective::surrogate;
  const Problem pb = make_fd_problem(ch, k, cfg, scenario, opts, surrogate);

  if (!(surrogate && scenario == Scenario::coherent)) {
    const Point x0 = initial_point(pb, opts, scenario == Scenario::coherent);
    return finish(run_alternation(pb, x0, opts), pb, ch, k, cfg, scenario);
  }
  // Objective depends on p_R only: push it to the top of its feasible set,
  // then give the source the largest power the cap allows.
  EngineOutput eo;
  Point x{0.0, 0.0};
  double best_r = kNegInf;
  for (int i = 0; i <= opts.scan_points; ++i) {
    const double s = pb.max_s * i / opts.scan_points;
    const auto segs = pb.segments(Axis::relay, {s, 0.0});
    if (!segs.empty() && segs.back().hi > best_r) best_r = segs.back().hi;
  }
  if (best_r > kNegInf) {
    x.r = best_r;
    const double s = pb.ridge_top(x.r);
    x.s = std::isnan(s) ? 0.0 : s;
    if (!pb.feasible(x)) x = scale_to_feasible(pb, x, opts.scan_points);
  }
  eo.x = x;
  eo.objective = pb.objective(x);
  eo.iterations = 1;
  eo.converged = true;
  eo.trace = {{0, 0.0}, {1, eo.objective}};
  return finish(eo, pb, ch, k, cfg, scenario);
}

RelayResult brute_force(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                        Scenario scenario, int grid_n) {
  if (grid_n < 2) throw ConfigError("grid_n must be >= 2");
  const auto g = link_gains(ch, k, cfg);
  RelayResult best;
  best.relay = k;
  double best_rate = kNegInf;
  for (int i = 0; i < grid_n; ++i) {
    const double ps = i == grid_n - 1 ? cfg.p_s_max : cfg.p_s_max * i / (grid_n - 1);
    for (int j = 0; j < grid_n; ++j) {
      const double pr = j == grid_n - 1 ? cfg.p_r_max : cfg.p_r_max * j / (grid_n - 1);
      const PowerAllocation a{ps, pr};
      const double intf = scenario == Scenario::coherent ? interference_coh(a, ch, k, cfg)
                                                         : kernel::interference_noncoh(g, ps, pr);
      if (!within_cap(intf, cfg.i_bar_p)) continue;
      const double rate = std::log2(1.0 + kernel::sinr_exact(g, ps, pr));
      if (rate > best_rate) {
        best_rate = rate;
        best.alloc = a;
      }
    }
  }
  best.rate = best_rate == kNegInf ? 0.0 : best_rate;
  best.objective = best.rate;
  best.surrogate = surrogate_objective(scenario, best.alloc, ch, k, cfg);
  best.iterations = 1;
  best.converged = true;
  return best;
}

RelayResult hd_baseline(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                        const SolverOptions& opts) {
  opts.validate();
  auto g = link_gains(ch, k, cfg);
  g.zeta = 0.0;
  // Each hop owns a slot, so each power is capped on its own.
  const double cap_s = g.g_sp > 0.0 ? std::min(cfg.p_s_max, cfg.i_bar_p / g.g_sp) : cfg.p_s_max;
  const double cap_r = g.g_rp > 0.0 ? std::min(cfg.p_r_max, cfg.i_bar_p / g.g_rp) : cfg.p_r_max;
  Problem pb;
  pb.max_s = cap_s;
  pb.max_r = cap_r;
  pb.power = [](Point x) { return PowerAllocation{x.s, x.r}; };
  pb.objective = [g](Point x) { return 0.5 * std::log2(1.0 + kernel::sinr_exact(g, x.s, x.r)); };
  pb.feasible = [=](Point x) { return x.s >= 0.0 && x.r >= 0.0 && x.s <= cap_s && x.r <= cap_r; };
  pb.segments = [=](Axis axis, Point) {
    return std::vector<Interval>{{0.0, axis == Axis::source ? cap_s : cap_r}};
  };
  pb.ridge_top = [=](double) { return cap_s; };

  SolverOptions o = opts;
  o.ridge_step = false;
  const EngineOutput eo = run_alternation(pb, initial_point(pb, o, false), o);
  RelayResult r;
  r.relay = k;
  r.alloc = pb.power(eo.x);
  r.rate = eo.objective;
  r.objective = eo.objective;
  r.surrogate = kernel::sinr_exact(g, r.alloc.p_s, r.alloc.p_r);
  r.iterations = eo.iterations;
  r.converged = eo.converged;
  r.trace = eo.trace;
  return r;
}

SolveResult select_relay(std::vector<RelayResult> per_relay) {
  if (per_relay.empty()) throw ConfigError("select_relay needs at least one relay");
  SolveResult out;
  out.per_relay = std::move(per_relay);
  for (std::size_t i = 1; i < out.per_relay.size(); ++i)
    if (out.per_relay[i].rate > out.per_relay[out.selected].rate) out.selected = i;
  return out;
}

RelayResult solve_relay(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                        Scenario scenario, const SolverOptions& opts) {
  return zeta_hat(ch, k, cfg) == 0.0 ? solve_zeta_zero(ch, k, cfg, scenario, opts)
                                     : alternate_optimize(ch, k, cfg, scenario, opts);
}

SolveResult solve(const ChannelRealization& ch, const NetworkConfig& cfg, Scenario scenario,
                  const SolverOptions& opts) {
  std::vector<RelayResult> per;
  per.reserve(ch.num_relays());
  for (std::size_t k = 0; k < ch.num_relays(); ++k)
    per.push_back(solve_relay(ch, k, cfg, scenario, opts));
  return select_relay(std::move(per));
}

SolveResult solve_hd(const ChannelRealization& ch, const NetworkConfig& cfg,
                     const SolverOptions& opts) {
  std::vector<RelayResult> per;
  for (std::size_t k = 0; k < ch.num_relays(); ++k) per.push_back(hd_baseline(ch, k, cfg, opts));
  return select_relay(std::move(per));
}

SolveResult solve_brute_force(const ChannelRealization& ch, const NetworkConfig& cfg,
                              Scenario scenario, int grid_n) {
  std::vector<RelayResult> per;
  for (std::size_t k = 0; k < ch.num_relays(); ++k)
    per.push_back(brute_force(ch, k, cfg, scenario, grid_n));
  return select_relay(std::move(per));
}

}  // namespace fdrelay
