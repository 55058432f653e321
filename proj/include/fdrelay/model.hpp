#pragma once

#include <cmath>
#include <cstddef>

#include "fdrelay/channel.hpp"
#include "fdrelay/config.hpp"

namespace fdrelay {

/// Transmit powers (linear) of the source and one relay.
struct PowerAllocation {
  double p_s = 0.0;
  double p_r = 0.0;

  friend bool operator==(const PowerAllocation&, const PowerAllocation&) = default;
};

/// Amplitude (square-root power) coordinates used by the coherent problem.
struct SqrtPower {
  double p_s = 0.0;
  double p_r = 0.0;

  [[nodiscard]] PowerAllocation power() const { return {p_s * p_s, p_r * p_r}; }
  static SqrtPower from(const PowerAllocation& a) { return {std::sqrt(a.p_s), std::sqrt(a.p_r)}; }
};

struct DerivedQuantities {
  double zeta_hat = 0.0;  ///< |h_rr|^2 * zeta
  double gain = 0.0;      ///< amplify-and-forward amplitude gain G_k
};

/// Squared channel magnitudes and noise levels seen by relay k. The formula
/// kernels below are written against this so they can run at any precision.
template <typename Scalar>
struct LinkGains {
  Scalar g_sr{};  ///< |h_sr|^2
  Scalar g_rd{};  ///< |h_rd|^2
  Scalar g_rr{};  ///< |h_rr|^2
  Scalar g_sp{};  ///< |h_sp|^2
  Scalar g_rp{};  ///< |h_rp|^2
  Scalar zeta{};
  Scalar sigma2_r{};
  Scalar sigma2_d{};

  [[nodiscard]] Scalar zeta_hat() const { return g_rr * zeta; }

  template <typename Other>
  [[nodiscard]] LinkGains<Other> cast() const {
    return {Other(g_sr), Other(g_rd), Other(g_rr), Other(g_sp),
            Other(g_rp), Other(zeta), Other(sigma2_r), Other(sigma2_d)};
  }
};

LinkGains<double> link_gains(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg);

namespace kernel {

/// G_k^-2 = P_S|h_sr|^2 + zeta P_R |h_rr|^2 + sigma_R^2
template <typename Scalar>
Scalar inverse_gain_sq(const LinkGains<Scalar>& g, Scalar ps, Scalar pr) {
  return ps * g.g_sr + g.zeta * pr * g.g_rr + g.sigma2_r;
}

/// The fraction inside log2(1 + .) of the exact achievable rate.
template <typename Scalar>
Scalar sinr_exact(const LinkGains<Scalar>& g, Scalar ps, Scalar pr) {
  const Scalar x = pr * g.g_rd / g.sigma2_d;
  const Scalar y = ps * g.g_sr / (g.zeta_hat() * pr + g.sigma2_r);
  return x * y / (Scalar(1) + x + y);
}

/// Exact fraction with the relay noise term dropped (zeta_hat > 0). Defined
/// by its limit 0 on the axes.
template <typename Scalar>
Scalar sinr_noncoh_surrogate(const LinkGains<Scalar>& g, Scalar ps, Scalar pr) {
  if (ps <= Scalar(0) || pr <= Scalar(0)) return Scalar(0);
  const Scalar x = pr * g.g_rd / g.sigma2_d;
  const Scalar y = ps * g.g_sr / (g.zeta_hat() * pr);
  return x * y / (Scalar(1) + x + y);
}

/// High-SNR form for ideal cancellation: xy / (x + y).
template <typename Scalar>
Scalar sinr_high_snr(const LinkGains<Scalar>& g, Scalar ps, Scalar pr) {
  if (ps <= Scalar(0) || pr <= Scalar(0)) return Scalar(0);
  const Scalar x = pr * g.g_rd / g.sigma2_d;
  const Scalar y = ps * g.g_sr / g.sigma2_r;
  return x * y / (x + y);
}

template <typename Scalar>
Scalar interference_noncoh(const LinkGains<Scalar>& g, Scalar ps, Scalar pr) {
  return g.g_sp * ps + g.g_rp * pr * (Scalar(1) + g.zeta);
}

/// f = 1/P_S + P_R|h_rd|^2/(P_S sigma_D^2) + |h_sr|^2/(zeta_hat P_R); the
/// non-coherent surrogate equals (|h_rd|^2/sigma_D^2)(|h_sr|^2/zeta_hat)/f.
template <typename Scalar>
Scalar reciprocal_noncoh(const LinkGains<Scalar>& g, Scalar ps, Scalar pr) {
  return Scalar(1) / ps + pr * g.g_rd / (ps * g.sigma2_d) + g.g_sr / (g.zeta_hat() * pr);
}

/// Same as reciprocal_noncoh in amplitude coordinates.
template <typename Scalar>
Scalar reciprocal_coh(const LinkGains<Scalar>& g, Scalar ps, Scalar pr) {
  return reciprocal_noncoh(g, ps * ps, pr * pr);
}

/// |h_rd|^2/(P_S sigma_D^2) + |h_sr|^2/(sigma_R^2 P_R), reciprocal of the
/// high-SNR objective up to the constant numerator.
template <typename Scalar>
Scalar reciprocal_high_snr(const LinkGains<Scalar>& g, Scalar ps, Scalar pr) {
  return g.g_rd / (ps * g.sigma2_d) + g.g_sr / (g.sigma2_r * pr);
}

}  // namespace kernel

double zeta_hat(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg);

DerivedQuantities derived_quantities(const PowerAllocation& alloc, const ChannelRealization& ch,
                                     std::size_t k, const NetworkConfig& cfg);

/// G_k = [P_S|h_sr|^2 + zeta P_R |h_rr|^2 + sigma_R^2]^(-1/2)
double relay_gain(const PowerAllocation& alloc, const ChannelRealization& ch, std::size_t k,
                  const NetworkConfig& cfg);

double sinr_exact(const PowerAllocation& alloc, const ChannelRealization& ch, std::size_t k,
                  const NetworkConfig& cfg);

/// Achievable rate of S -> R_k -> D in bits/s/Hz (direct link ignored).
double rate_exact(const PowerAllocation& alloc, const ChannelRealization& ch, std::size_t k,
                  const NetworkConfig& cfg);

/// Non-coherent surrogate objective (relay noise dropped). Throws ZetaHatZero.
double rate_noncoh_obj(const PowerAllocation& alloc, const ChannelRealization& ch, std::size_t k,
                       const NetworkConfig& cfg);

/// Coherent surrogate in amplitude coordinates; equals rate_noncoh_obj(p^2).
double rate_coh_obj(const SqrtPower& p, const ChannelRealization& ch, std::size_t k,
                    const NetworkConfig& cfg);

/// High-SNR objective used when zeta_hat == 0 (non-coherent).
double rate_high_snr_obj(const PowerAllocation& alloc, const ChannelRealization& ch,
                         std::size_t k, const NetworkConfig& cfg);

/// zeta_hat == 0 coherent objective |h_rd|^2 p_R^2 / sigma_D^2.
double rate_coh_zeta_zero_obj(const SqrtPower& p, const ChannelRealization& ch, std::size_t k,
                              const NetworkConfig& cfg);

/// |h_sp|^2 P_S + |h_rp|^2 P_R (1 + zeta)
double interference_noncoh(const PowerAllocation& alloc, const ChannelRealization& ch,
                           std::size_t k, const NetworkConfig& cfg);

}  // namespace fdrelay
