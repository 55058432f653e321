#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fdrelay/channel.hpp"
#include "fdrelay/config.hpp"
#include "fdrelay/model.hpp"
#include "fdrelay/phase.hpp"

namespace fdrelay {

enum class Definiteness {
  negative_definite,
  negative_semidefinite,
  indefinite,
  positive_semidefinite,
  positive_definite,
  zero,
};

const char* to_string(Definiteness d);

/// Second partials of a reciprocal objective (1/f, 1/g or 1/f~) at a point.
struct HessianReport {
  Eigen::Matrix2d h;
  double det = 0.0;
  Definiteness definiteness = Definiteness::zero;

  [[nodiscard]] double h11() const { return h(0, 0); }
  [[nodiscard]] double h12() const { return h(0, 1); }
  [[nodiscard]] double h21() const { return h(1, 0); }
  [[nodiscard]] double h22() const { return h(1, 1); }
};

/// Sylvester test on a symmetric 2x2 matrix. A determinant below
/// 1e-9 * (|h11 h22| + h12^2) counts as zero.
Definiteness classify(const Eigen::Matrix2d& h);
HessianReport make_report(const Eigen::Matrix2d& h);

/// Value, gradient and second partials of a two-variable function.
struct Partials {
  double value = 0.0;
  double d_s = 0.0;
  double d_r = 0.0;
  double d_ss = 0.0;
  double d_sr = 0.0;
  double d_rr = 0.0;
};

/// Closed-form partials of f (linear powers), g (amplitudes) and f~.
Partials partials_f(const LinkGains<double>& g, double p_s, double p_r);
Partials partials_g(const LinkGains<double>& g, double p_s, double p_r);
Partials partials_f_tilde(const LinkGains<double>& g, double p_s, double p_r);

/// Hessian of 1/F from the partials of F: H_ij = -(F F_ij - 2 F_i F_j) / F^3.
Eigen::Matrix2d reciprocal_hessian(const Partials& p);

/// Central-difference partials with step 1e-4 times each coordinate,
/// evaluated in quad precision.
enum class ReciprocalKind { f, g, f_tilde };
Partials numeric_partials(ReciprocalKind kind, const LinkGains<double>& g, double p_s,
                          double p_r);
Eigen::Matrix2d numeric_reciprocal_hessian(ReciprocalKind kind, const LinkGains<double>& g,
                                           double p_s, double p_r);

/// Hessian of 1/f. Throws DomainError off the open quadrant or when zeta_hat = 0.
HessianReport hessian_noncoh(const PowerAllocation& point, const ChannelRealization& ch,
                             std::size_t k, const NetworkConfig& cfg);

/// Hessian of 1/g in amplitude coordinates.
HessianReport hessian_coh(const SqrtPower& point, const ChannelRealization& ch, std::size_t k,
                          const NetworkConfig& cfg);

/// Hessian of 1/f~ (ideal cancellation, high SNR). Valid for any zeta.
HessianReport hessian_high_snr(const PowerAllocation& point, const ChannelRealization& ch,
                               std::size_t k, const NetworkConfig& cfg);

/// H11 H22 - H12^2 of hessian_noncoh.
double sc1(const PowerAllocation& point, const ChannelRealization& ch, std::size_t k,
           const NetworkConfig& cfg);

/// |h_rd|^2 / (P_S^6 sigma_D^2) (a P_S^2 + b P_S + c) as printed with the
/// displayed coefficients. Its sign disagrees with sc1 past the witness region.
double sc1_paper_form(const PowerAllocation& point, const ChannelRealization& ch, std::size_t k,
                      const NetworkConfig& cfg);

/// G11 G22 - G12^2 of hessian_coh.
double sc2(const SqrtPower& point, const ChannelRealization& ch, std::size_t k,
           const NetworkConfig& cfg);

/// Source-power threshold of the non-coherent witness at fixed P_R.
struct NoncohThreshold {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double omega = 0.0;  ///< b^2 - 4ac
  double p_s1 = 0.0;   ///< negative root
  double p_s2 = 0.0;   ///< positive root; 1/f is indefinite on (0, p_s2)
  double exact = 0.0;  ///< where det of the Hessian of 1/f changes sign
};

NoncohThreshold threshold_ps(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                             double p_rk);

/// Amplitude thresholds of the coherent witness at fixed p_R.
struct CohThresholds {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double p_rk_tilde = 0.0;  ///< sigma_D / (sqrt(3) |h_rd|)
  double p_s1 = 0.0;        ///< sqrt(zeta_hat / 6) p_R / |h_sr|
  double p_s2 = 0.0;        ///< positive root of eta(p_S) = a1 p^4 + 2 a2 p^2 + a3
  double p_s_tilde = 0.0;   ///< min(p_s1, p_s2)
};

CohThresholds thresholds_coh(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg,
                             double p_rk);

struct Sc2Witness {
  SqrtPower point;
  double sc2 = 0.0;
  int halvings = 0;
};

/// Interior point where 1/g is indefinite, built from the thresholds and
/// halved toward the origin (at most 40 times) until the determinant is negative.
Sc2Witness sc2_witness(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg);

/// Curvatures of the convexified constraint: 2|h_sp|^2 in p_S, 2(F1^2 + F2^2) in p_R.
struct ConstraintCurvature {
  double d_ss = 0.0;
  double d_rr = 0.0;
};

ConstraintCurvature convexified_curvature(const ChannelRealization& ch,
                                          const ConvexifiedConstraint& frozen);

struct LemmaOutcome {
  std::string name;
  bool passed = false;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string detail;
};

struct LemmaSuiteOptions {
  std::uint64_t seed = 20240601;
  std::size_t interior_points = 10000;
  std::size_t witness_draws = 100;
  std::size_t phase_instances = 1000;
  std::size_t phase_grid = 10000;
};

/// Theorem and lemma checks on random channels and random interior points.
std::vector<LemmaOutcome> run_lemma_suite(const LemmaSuiteOptions& opts = {});

struct CalculusReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  double worst_ratio = 0.0;  ///< max |closed - numeric| / max(1e-6, 1e-4 |closed|)
  std::string worst_quantity;
};

/// Closed-form partials and curvatures versus central differences.
CalculusReport check_calculus(std::size_t points, std::uint64_t seed);

}  // namespace fdrelay
