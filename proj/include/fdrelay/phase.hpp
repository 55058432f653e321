#pragma once

#include <complex>
#include <cstddef>

#include "fdrelay/channel.hpp"
#include "fdrelay/config.hpp"
#include "fdrelay/model.hpp"

namespace fdrelay {

/// Source-driven (A) and relay-forwarded (B) components of the signal at
/// the PU receiver: interference(phi) = |A + B e^{-j phi}|^2.
struct CoherentDecomposition {
  Complex a;
  Complex b;
  double phi_a = 0.0;
  double phi_b = 0.0;
};

struct PhaseSolution {
  double phi_opt = 0.0;  ///< in [0, 2 pi)
  double i_coh = 0.0;    ///< (|A| - |B|)^2
  double delay = 0.0;    ///< phi_opt / (2 pi f_s), seconds, within one sampling period
};

/// Quadratic stand-in for the coherent interference in amplitude
/// coordinates, with |B| replaced by sqrt(3) p_R |h_rp| and the phase frozen.
struct ConvexifiedConstraint {
  double f1 = 0.0;
  double f2 = 0.0;
  double frozen_phi = 0.0;
};

CoherentDecomposition decompose(const PowerAllocation& alloc, const ChannelRealization& ch,
                                std::size_t k, const NetworkConfig& cfg);

/// phi_opt = pi + phi_B - phi_A. A = B = 0 gives phi_opt = pi.
PhaseSolution optimal_phase(const CoherentDecomposition& dec, double sampling_freq = 1.0);

/// |A + B e^{-j phi}|^2
double interference_at_phase(const CoherentDecomposition& dec, double phi);

/// Interference at the optimal phase, (|A| - |B|)^2.
double interference_coh(const PowerAllocation& alloc, const ChannelRealization& ch, std::size_t k,
                        const NetworkConfig& cfg);

/// Freezes F1/F2 at the optimal phase of `reference`.
ConvexifiedConstraint freeze_convexified(const PowerAllocation& reference,
                                         const ChannelRealization& ch, std::size_t k,
                                         const NetworkConfig& cfg);

/// (Re(h_sp) p_S + F1 p_R)^2 + (Im(h_sp) p_S + F2 p_R)^2
double convexified_interference(const SqrtPower& p, const ChannelRealization& ch, std::size_t k,
                                const NetworkConfig& cfg, const ConvexifiedConstraint& frozen);

/// Terms of |D|^2 = G^-2 + L where D is the pre-gain relay signal
/// amplitude. `half_l` is evaluated from its expanded cross-term form.
struct CrossTermBound {
  double half_l = 0.0;
  double inverse_gain_sq = 0.0;
  double d_norm_sq = 0.0;
};

CrossTermBound cross_term_bound(const SqrtPower& p, const ChannelRealization& ch, std::size_t k,
                                const NetworkConfig& cfg);

/// |B|^2 / (3 p_R^2 |h_rp|^2): how far the quadratic stand-in is from the
/// true forwarded component. NaN at p_R = 0.
double b_approximation_ratio(const PowerAllocation& alloc, const ChannelRealization& ch,
                             std::size_t k, const NetworkConfig& cfg);

}  // namespace fdrelay
