#include "fdrelay/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/LU>

#include "fdrelay/errors.hpp"

namespace fdrelay {

namespace {

constexpr double kFdStep = 1e-4;

// Finite differences run in quad precision so roundoff stays far below the
// step's truncation error even when the terms of f differ by many decades.
__extension__ typedef __float128 Quad;

void require_interior(double p_s, double p_r, const char* what) {
  if (!(p_s > 0.0) || !(p_r > 0.0) || !std::isfinite(p_s) || !std::isfinite(p_r))
    throw DomainError(std::string(what) + ": point must lie in the open positive quadrant");
}

void require_zeta_hat(const LinkGains<double>& g, const char* what) {
  if (!(g.zeta_hat() > 0.0)) throw DomainError(std::string(what) + ": needs zeta_hat > 0");
}

template <typename Scalar>
Scalar reciprocal(ReciprocalKind kind, const LinkGains<Scalar>& g, Scalar ps, Scalar pr) {
  switch (kind) {
    case ReciprocalKind::f: return kernel::reciprocal_noncoh(g, ps, pr);
    case ReciprocalKind::g: return kernel::reciprocal_coh(g, ps, pr);
    case ReciprocalKind::f_tilde: return kernel::reciprocal_high_snr(g, ps, pr);
  }
  return Scalar(0);
}

// Random interior instance for the property checks.
struct Instance {
  NetworkConfig cfg;
  ChannelRealization ch;
  LinkGains<double> g;
  double p_s = 0.0;
  double p_r = 0.0;
};

class InstanceSource {
 public:
  explicit InstanceSource(std::uint64_t seed) : rng_(seed) {}

  Instance next(bool zeta_zero = false) {
    Instance in;
    in.cfg.num_relays = 1;
    in.cfg.zeta = zeta_zero ? 0.0 : log_uniform(1e-4, 1.0);
    in.cfg.sigma2_relay = log_uniform(0.1, 10.0);
    in.cfg.sigma2_dest = log_uniform(0.1, 10.0);
    in.ch = sample_channels(in.cfg, rng_());
    in.g = link_gains(in.ch, 0, in.cfg);
    in.p_s = log_uniform(1e-2, 1e2);
    in.p_r = log_uniform(1e-2, 1e2);
    return in;
  }

  double log_uniform(double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng_));
  }

 private:
  std::mt19937_64 rng_;
};

bool close_enough(double closed, double numeric, double* ratio) {
  const double tol = std::max(1e-6, 1e-4 * std::abs(closed));
  const double r = std::abs(closed - numeric) / tol;
  if (ratio) *ratio = r;
  return r <= 1.0;
}

LemmaOutcome outcome(std::string name, std::size_t checked, std::size_t failures,
                     std::string detail = {}) {
  return {std::move(name), failures == 0 && checked > 0, checked, failures, std::move(detail)};
}

}  // namespace

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::negative_definite: return "negative-definite";
    case Definiteness::negative_semidefinite: return "negative-semidefinite";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::positive_semidefinite: return "positive-semidefinite";
    case Definiteness::positive_definite: return "positive-definite";
    case Definiteness::zero: return "zero";
  }
  return "?";
}

Definiteness classify(const Eigen::Matrix2d& h) {
  const double det = h.determinant();
  const double scale = std::abs(h(0, 0) * h(1, 1)) + std::abs(h(0, 1) * h(1, 0));
  const double tol = 1e-9 * scale;
  if (det < -tol) return Definiteness::indefinite;
  const double trace = h.trace();
  if (det > tol)
    return h(0, 0) < 0.0 ? Definiteness::negative_definite : Definiteness::positive_definite;
  if (trace < 0.0) return Definiteness::negative_semidefinite;
  if (trace > 0.0) return Definiteness::positive_semidefinite;
  return Definiteness::zero;
}

HessianReport make_report(const Eigen::Matrix2d& h) {
  return {h, h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0), classify(h)};
}

Partials partials_f(const LinkGains<double>& g, double p_s, double p_r) {
  const double d = g.g_rd;
  const double s = g.g_sr;
  const double zh = g.zeta_hat();
  const double sd2 = g.sigma2_d;
  Partials p;
  p.value = kernel::reciprocal_noncoh(g, p_s, p_r);
  p.d_ss = 2.0 / (p_s * p_s * p_s) + 2.0 * p_r * d / (sd2 * p_s * p_s * p_s);
  p.d_sr = -d / (sd2 * p_s * p_s);
  p.d_rr = 2.0 * s / (zh * p_r * p_r * p_r);
  p.d_r = d / (p_s * sd2) - s / (zh * p_r * p_r);
  p.d_s = -1.0 / (p_s * p_s) - d * p_r / (p_s * p_s * sd2);
  return p;
}

Partials partials_g(const LinkGains<double>& g, double p_s, double p_r) {
  const double d = g.g_rd;
  const double s = g.g_sr;
  const double zh = g.zeta_hat();
  const double sd2 = g.sigma2_d;
  const double ps2 = p_s * p_s;
  const double ps3 = ps2 * p_s;
  const double ps4 = ps2 * ps2;
  const double pr2 = p_r * p_r;
  Partials p;
  p.value = kernel::reciprocal_coh(g, p_s, p_r);
  p.d_ss = 6.0 / ps4 + 6.0 * d * pr2 / (sd2 * ps4);
  p.d_sr = -4.0 * p_r * d / (sd2 * ps3);
  p.d_rr = 2.0 * d / (ps2 * sd2) + 6.0 * s / (zh * pr2 * pr2);
  p.d_r = 2.0 * d * p_r / (ps2 * sd2) - 2.0 * s / (zh * pr2 * p_r);
  p.d_s = -2.0 / ps3 - 2.0 * d * pr2 / (ps3 * sd2);
  return p;
}

Partials partials_f_tilde(const LinkGains<double>& g, double p_s, double p_r) {
  const double d = g.g_rd;
  const double s = g.g_sr;
  Partials p;
  p.value = kernel::reciprocal_high_snr(g, p_s, p_r);
  p.d_ss = 2.0 * d / (g.sigma2_d * p_s * p_s * p_s);
  p.d_sr = 0.0;
  p.d_rr = 2.0 * s / (g.sigma2_r * p_r * p_r * p_r);
  p.d_r = -s / (g.sigma2_r * p_r * p_r);
  p.d_s = -d / (g.sigma2_d * p_s * p_s);
  return p;
}

Eigen::Matrix2d reciprocal_hessian(const Partials& p) {
  const double f3 = p.value * p.value * p.value;
  Eigen::Matrix2d h;
  h(0, 0) = -(p.value * p.d_ss - 2.0 * p.d_s * p.d_s) / f3;
  h(0, 1) = -(p.value * p.d_sr - 2.0 * p.d_s * p.d_r) / f3;
  h(1, 0) = h(0, 1);
  h(1, 1) = -(p.value * p.d_rr - 2.0 * p.d_r * p.d_r) / f3;
  return h;
}

Partials numeric_partials(ReciprocalKind kind, const LinkGains<double>& g, double p_s,
                          double p_r) {
  using Q = Quad;
  const auto gl = g.cast<Q>();
  const Q xs = p_s;
  const Q xr = p_r;
  const Q hs = kFdStep * xs;
  const Q hr = kFdStep * xr;
  auto F = [&](Q a, Q b) { return reciprocal(kind, gl, a, b); };
  const Q f0 = F(xs, xr);
  Partials p;
  p.value = static_cast<double>(f0);
  p.d_s = static_cast<double>((F(xs + hs, xr) - F(xs - hs, xr)) / (2 * hs));
  p.d_r = static_cast<double>((F(xs, xr + hr) - F(xs, xr - hr)) / (2 * hr));
  p.d_ss = static_cast<double>((F(xs + hs, xr) - 2 * f0 + F(xs - hs, xr)) / (hs * hs));
  p.d_rr = static_cast<double>((F(xs, xr + hr) - 2 * f0 + F(xs, xr - hr)) / (hr * hr));
  p.d_sr = static_cast<double>((F(xs + hs, xr + hr) - F(xs + hs, xr - hr) -
                                F(xs - hs, xr + hr) + F(xs - hs, xr - hr)) /
                               (4 * hs * hr));
  return p;
}

Eigen::Matrix2d numeric_reciprocal_hessian(ReciprocalKind kind, const LinkGains<double>& g,
                                           double p_s, double p_r) {
  using Q = Quad;
  const auto gl = g.cast<Q>();
  const Q xs = p_s;
  const Q xr = p_r;
  const Q hs = kFdStep * xs;
  const Q hr = kFdStep * xr;
  auto R = [&](Q a, Q b) { return Q(1) / reciprocal(kind, gl, a, b); };
  const Q r0 = R(xs, xr);
  Eigen::Matrix2d h;
  h(0, 0) = static_cast<double>((R(xs + hs, xr) - 2 * r0 + R(xs - hs, xr)) / (hs * hs));
  h(1, 1) = static_cast<double>((R(xs, xr + hr) - 2 * r0 + R(xs, xr - hr)) / (hr * hr));
  h(0, 1) = static_cast<double>((R(xs + hs, xr + hr) - R(xs + hs, xr - hr) -
                                 R(xs - hs, xr + hr) + R(xs - hs, xr - hr)) /
                                (4 * hs * hr));
  h(1, 0) = h(0, 1);
  return h;
}

HessianReport hessian_noncoh(const PowerAllocation& point, const ChannelRealization& ch,
                             std::size_t k, const NetworkConfig& cfg) {
  require_interior(point.p_s, point.p_r, "hessian_noncoh");
  const auto g = link_gains(ch, k, cfg);
  require_zeta_hat(g, "hessian_noncoh");
  return make_report(reciprocal_hessian(partials_f(g, point.p_s, point.p_r)));
}

HessianReport hessian_coh(const SqrtPower& point, const ChannelRealization& ch, std::size_t k,
                          const NetworkConfig& cfg) {
  require_interior(point.p_s, point.p_r, "hessian_coh");
  const auto g = link_gains(ch, k, cfg);
  require_zeta_hat(g, "hessian_coh");
  return make_report(reciprocal_hessian(partials_g(g, point.p_s, point.p_r)));
}

HessianReport hessian_high_snr(const PowerAllocation& point, const ChannelRealization& ch,
                               std::size_t k, const NetworkConfig& cfg) {
  require_interior(point.p_s, point.p_r, "hessian_high_snr");
  const auto g = link_gains(ch, k, cfg);
  // Factored entries; the generic formula cancels badly when one term of f~ dominates.
  const double ft = kernel::reciprocal_high_snr(g, point.p_s, point.p_r);
  const double common =
      2.0 * g.g_rd * g.g_sr / (g.sigma2_d * g.sigma2_r * ft * ft * ft * point.p_s * point.p_r);
  Eigen::Matrix2d h;
  h(0, 0) = -common / (point.p_s * point.p_s);
  h(0, 1) = common / (point.p_s * point.p_r);
  h(1, 0) = h(0, 1);
  h(1, 1) = -common / (point.p_r * point.p_r);
  return make_report(h);
}

double sc1(const PowerAllocation& point, const ChannelRealization& ch, std::size_t k,
           const NetworkConfig& cfg) {
  return hessian_noncoh(point, ch, k, cfg).det;
}

double sc1_paper_form(const PowerAllocation& point, const ChannelRealization& ch, std::size_t k,
                      const NetworkConfig& cfg) {
  require_interior(point.p_s, point.p_r, "sc1_paper_form");
  const auto t = threshold_ps(ch, k, cfg, point.p_r);
  const double d = std::norm(ch.relay(k).h_rd);
  const double ps = point.p_s;
  return d / (std::pow(ps, 6) * cfg.sigma2_dest) * (t.a * ps * ps + t.b * ps + t.c);
}

double sc2(const SqrtPower& point, const ChannelRealization& ch, std::size_t k,
           const NetworkConfig& cfg) {
  return hessian_coh(point, ch, k, cfg).det;
}

NoncohThreshold threshold_ps(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                             double p_rk) {
  if (!(p_rk > 0.0)) throw DomainError("threshold_ps: p_rk must be > 0");
  const auto g = link_gains(ch, k, cfg);
  require_zeta_hat(g, "threshold_ps");
  const double s = g.g_sr;
  const double d = g.g_rd;
  const double zh = g.zeta_hat();
  const double sd2 = g.sigma2_d;
  const double load = d * p_rk / sd2;

  NoncohThreshold t;
  t.a = s * s / (zh * zh * p_rk * p_rk * p_rk) * (12.0 + 11.0 * load);
  t.b = 2.0 * s / (zh * p_rk * p_rk) * (2.0 + load);
  t.c = -d / sd2 * (1.0 + load);
  t.omega = t.b * t.b - 4.0 * t.a * t.c;
  const double sq = std::sqrt(t.omega);
  t.p_s1 = (-t.b - sq) / (2.0 * t.a);
  // Cancellation-free form of (-b + sqrt(omega)) / (2a).
  t.p_s2 = -2.0 * t.c / (t.b + sq);
  t.exact = p_rk * p_rk * d * zh * (p_rk * d + sd2) / (s * sd2 * (3.0 * p_rk * d + 4.0 * sd2));
  return t;
}

CohThresholds thresholds_coh(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                             double p_rk) {
  if (!(p_rk > 0.0)) throw DomainError("thresholds_coh: p_rk must be > 0");
  const auto g = link_gains(ch, k, cfg);
  require_zeta_hat(g, "thresholds_coh");
  const double s = g.g_sr;
  const double d = g.g_rd;
  const double zh = g.zeta_hat();
  const double sd2 = g.sigma2_d;
  const double pr2 = p_rk * p_rk;

  CohThresholds t;
  t.a1 = 2.0 * s / (zh * zh * std::pow(p_rk, 6));
  t.a2 = -3.0 * s / (zh * pr2 * pr2 * sd2) * (sd2 + 4.0 * d * pr2);
  t.a3 = -2.0 * d / (sd2 * sd2) * (sd2 - 3.0 * d * pr2);
  t.p_rk_tilde = std::sqrt(sd2) / (std::sqrt(3.0) * std::sqrt(d));
  t.p_s1 = std::sqrt(zh / 6.0) * p_rk / std::sqrt(s);
  const double omega = t.a2 * t.a2 - t.a1 * t.a3;
  const double root_sq = (-t.a2 + std::sqrt(omega)) / t.a1;  // root of eta in p_S^2
  t.p_s2 = root_sq > 0.0 ? std::sqrt(root_sq) : 0.0;
  t.p_s_tilde = std::min(t.p_s1, t.p_s2);
  return t;
}

Sc2Witness sc2_witness(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg) {
  const auto g = link_gains(ch, k, cfg);
  require_zeta_hat(g, "sc2_witness");
  const double p_rk_tilde = std::sqrt(g.sigma2_d) / (std::sqrt(3.0) * std::sqrt(g.g_rd));
  Sc2Witness w;
  w.point.p_r = 0.5 * std::min(p_rk_tilde, std::sqrt(cfg.p_r_max));
  w.point.p_s = 0.5 * thresholds_coh(ch, k, cfg, w.point.p_r).p_s_tilde;
  w.sc2 = sc2(w.point, ch, k, cfg);
  while (!(w.sc2 < 0.0) && w.halvings < 40) {
    w.point.p_s *= 0.5;
    w.point.p_r *= 0.5;
    ++w.halvings;
    w.sc2 = sc2(w.point, ch, k, cfg);
  }
  return w;
}

ConstraintCurvature convexified_curvature(const ChannelRealization& ch,
                                          const ConvexifiedConstraint& frozen) {
  return {2.0 * std::norm(ch.h_sp), 2.0 * (frozen.f1 * frozen.f1 + frozen.f2 * frozen.f2)};
}

std::vector<LemmaOutcome> run_lemma_suite(const LemmaSuiteOptions& opts) {
  std::vector<LemmaOutcome> out;
  InstanceSource src(opts.seed);

  {
    std::size_t fail = 0;
    std::mt19937_64 rng(opts.seed ^ 0x7468656f72656d31ULL);
    std::normal_distribution<double> n01;
    for (std::size_t i = 0; i < opts.phase_instances; ++i) {
      CoherentDecomposition dec;
      dec.a = {n01(rng), n01(rng)};
      dec.b = {n01(rng), n01(rng)};
      dec.phi_a = std::arg(dec.a);
      dec.phi_b = std::arg(dec.b);
      const auto sol = optimal_phase(dec);
      double grid_min = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < opts.phase_grid; ++j)
        grid_min = std::min(grid_min, interference_at_phase(
                                          dec, 2.0 * std::numbers::pi * j / opts.phase_grid));
      const double scale = std::norm(dec.a) + std::norm(dec.b);
      const double at_opt = interference_at_phase(dec, sol.phi_opt);
      if (sol.i_coh > grid_min + 1e-9 * scale || std::abs(at_opt - sol.i_coh) > 1e-12 * scale)
        ++fail;
    }
    out.push_back(outcome("theorem-1", opts.phase_instances, fail));
  }

  {
    std::size_t fail = 0;
    for (std::size_t i = 0; i < opts.witness_draws; ++i) {
      const Instance in = src.next();
      const auto t = threshold_ps(in.ch, 0, in.cfg, in.p_r);
      const double ps = 0.5 * t.p_s2;
      const bool root_ok = t.p_s1 < 0.0 && t.p_s2 > 0.0;
      const auto num = numeric_reciprocal_hessian(ReciprocalKind::f, in.g, ps, in.p_r);
      const bool closed_ok = sc1({ps, in.p_r}, in.ch, 0, in.cfg) < 0.0;
      if (!root_ok || !closed_ok || !(num.determinant() < 0.0)) ++fail;
    }
    out.push_back(outcome("lemma-1", opts.witness_draws, fail));
  }

  {
    std::size_t fail = 0;
    for (std::size_t i = 0; i < opts.interior_points; ++i) {
      const Instance in = src.next();
      const auto p = partials_f(in.g, in.p_s, in.p_r);
      if (!(p.d_ss > 0.0) || !(p.d_rr > 0.0)) ++fail;
    }
    out.push_back(outcome("lemma-2", opts.interior_points, fail));
  }

  {
    std::size_t fail = 0;
    for (std::size_t i = 0; i < opts.interior_points; ++i) {
      const Instance in = src.next(true);
      const auto r = hessian_high_snr({in.p_s, in.p_r}, in.ch, 0, in.cfg);
      const double scale = std::abs(r.h11() * r.h22()) + r.h12() * r.h12();
      if (!(r.h11() < 0.0) || std::abs(r.det) > 1e-9 * scale ||
          r.definiteness != Definiteness::negative_semidefinite)
        ++fail;
    }
    out.push_back(outcome("lemma-3", opts.interior_points, fail));
  }

  {
    std::size_t fail = 0;
    int max_halvings = 0;
    for (std::size_t i = 0; i < opts.witness_draws; ++i) {
      const Instance in = src.next();
      const auto w = sc2_witness(in.ch, 0, in.cfg);
      max_halvings = std::max(max_halvings, w.halvings);
      const auto num = numeric_reciprocal_hessian(ReciprocalKind::g, in.g, w.point.p_s,
                                                  w.point.p_r);
      if (!(w.sc2 < 0.0) || !(num.determinant() < 0.0)) ++fail;
    }
    out.push_back(outcome("lemma-4", opts.witness_draws, fail,
                          "max halvings " + std::to_string(max_halvings)));
  }

  {
    std::size_t fail = 0;
    for (std::size_t i = 0; i < opts.interior_points; ++i) {
      const Instance in = src.next();
      const double ps = std::sqrt(in.p_s);
      const double pr = std::sqrt(in.p_r);
      const auto p = partials_g(in.g, ps, pr);
      const auto frozen = freeze_convexified({in.p_s, in.p_r}, in.ch, 0, in.cfg);
      const auto curv = convexified_curvature(in.ch, frozen);
      if (!(p.d_ss > 0.0) || !(p.d_rr > 0.0) || curv.d_ss < 0.0 || curv.d_rr < 0.0) ++fail;
    }
    out.push_back(outcome("lemma-5", opts.interior_points, fail));
  }

  {
    // Ideal cancellation, coherent: the objective ignores p_S and grows with p_R.
    std::size_t fail = 0;
    for (std::size_t i = 0; i < opts.interior_points; ++i) {
      const Instance in = src.next(true);
      const double ps = std::sqrt(in.p_s);
      const double pr = std::sqrt(in.p_r);
      const double v = rate_coh_zeta_zero_obj({ps, pr}, in.ch, 0, in.cfg);
      const double v_other_s = rate_coh_zeta_zero_obj({2.0 * ps, pr}, in.ch, 0, in.cfg);
      const double v_more_r = rate_coh_zeta_zero_obj({ps, 1.5 * pr}, in.ch, 0, in.cfg);
      const double mid = rate_coh_zeta_zero_obj({ps, 1.25 * pr}, in.ch, 0, in.cfg);
      if (v != v_other_s || !(v_more_r > v) || mid > 0.5 * (v + v_more_r)) ++fail;
    }
    out.push_back(outcome("lemma-6", opts.interior_points, fail));
  }
  return out;
}

CalculusReport check_calculus(std::size_t points, std::uint64_t seed) {
  CalculusReport rep;
  InstanceSource src(seed);
  auto compare = [&](const char* what, double closed, double numeric) {
    double ratio = 0.0;
    ++rep.checked;
    if (!close_enough(closed, numeric, &ratio)) ++rep.failures;
    if (ratio > rep.worst_ratio) {
      rep.worst_ratio = ratio;
      rep.worst_quantity = what;
    }
  };
  auto compare_partials = [&](const char* tag, const Partials& c, const Partials& n) {
    const std::string t(tag);
    compare((t + ".d_s").c_str(), c.d_s, n.d_s);
    compare((t + ".d_r").c_str(), c.d_r, n.d_r);
    compare((t + ".d_ss").c_str(), c.d_ss, n.d_ss);
    compare((t + ".d_sr").c_str(), c.d_sr, n.d_sr);
    compare((t + ".d_rr").c_str(), c.d_rr, n.d_rr);
  };
  auto compare_hessian = [&](const char* tag, const Eigen::Matrix2d& c, const Eigen::Matrix2d& n) {
    const std::string t(tag);
    compare((t + ".h11").c_str(), c(0, 0), n(0, 0));
    compare((t + ".h12").c_str(), c(0, 1), n(0, 1));
    compare((t + ".h22").c_str(), c(1, 1), n(1, 1));
  };

  for (std::size_t i = 0; i < points; ++i) {
    const Instance in = src.next();
    const double ps = in.p_s;
    const double pr = in.p_r;
    compare_partials("f", partials_f(in.g, ps, pr), numeric_partials(ReciprocalKind::f, in.g, ps, pr));
    compare_hessian("hess_f", reciprocal_hessian(partials_f(in.g, ps, pr)),
                    numeric_reciprocal_hessian(ReciprocalKind::f, in.g, ps, pr));

    const double as = std::sqrt(ps);
    const double ar = std::sqrt(pr);
    compare_partials("g", partials_g(in.g, as, ar), numeric_partials(ReciprocalKind::g, in.g, as, ar));
    compare_hessian("hess_g", reciprocal_hessian(partials_g(in.g, as, ar)),
                    numeric_reciprocal_hessian(ReciprocalKind::g, in.g, as, ar));

    compare_partials("f_tilde", partials_f_tilde(in.g, ps, pr),
                     numeric_partials(ReciprocalKind::f_tilde, in.g, ps, pr));

    // Convexified constraint curvatures against a second difference.
    const auto frozen = freeze_convexified({ps, pr}, in.ch, 0, in.cfg);
    const auto curv = convexified_curvature(in.ch, frozen);
    auto q = [&](Quad s, Quad r) {
      const Quad re = in.ch.h_sp.real() * s + frozen.f1 * r;
      const Quad im = in.ch.h_sp.imag() * s + frozen.f2 * r;
      return re * re + im * im;
    };
    const Quad hs = kFdStep * as;
    const Quad hr = kFdStep * ar;
    const Quad q0 = q(as, ar);
    compare("constraint.d_ss", curv.d_ss,
            static_cast<double>((q(as + hs, ar) - 2 * q0 + q(as - hs, ar)) / (hs * hs)));
    compare("constraint.d_rr", curv.d_rr,
            static_cast<double>((q(as, ar + hr) - 2 * q0 + q(as, ar - hr)) / (hr * hr)));
  }
  return rep;
}

}  // namespace fdrelay
