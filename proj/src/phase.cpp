#include "fdrelay/phase.hpp"

#include <cmath>
#include <numbers>

namespace fdrelay {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
  double wrapped = std::fmod(phi, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

}  // namespace

CoherentDecomposition decompose(const PowerAllocation& alloc, const ChannelRealization& ch,
                                std::size_t k, const NetworkConfig& cfg) {
  const RelayLinks& r = ch.relay(k);
  const double sqrt_ps = std::sqrt(alloc.p_s);
  const double sqrt_pr = std::sqrt(alloc.p_r);
  const double sqrt_zeta_pr = std::sqrt(cfg.zeta * alloc.p_r);
  const double sigma_r = std::sqrt(cfg.sigma2_relay);

  CoherentDecomposition dec;
  dec.a = ch.h_sp * sqrt_ps + r.h_rp * sqrt_zeta_pr;
  const Complex relay_input =
      r.h_sr * sqrt_ps + r.h_rr * sqrt_zeta_pr + Complex(1.0, 1.0) * (sigma_r / std::sqrt(2.0));
  dec.b = relay_input * relay_gain(alloc, ch, k, cfg) * r.h_rp * sqrt_pr;
  dec.phi_a = std::arg(dec.a);
  dec.phi_b = std::arg(dec.b);
  return dec;
}

PhaseSolution optimal_phase(const CoherentDecomposition& dec, double sampling_freq) {
  const double mag_a = std::abs(dec.a);
  const double mag_b = std::abs(dec.b);
  PhaseSolution sol;
  sol.phi_opt = (mag_a == 0.0 && mag_b == 0.0)
                    ? std::numbers::pi
                    : wrap_phase(std::numbers::pi + dec.phi_b - dec.phi_a);
  const double diff = mag_a - mag_b;
  sol.i_coh = diff * diff;
  sol.delay = sol.phi_opt / (kTwoPi * sampling_freq);
  return sol;
}

double interference_at_phase(const CoherentDecomposition& dec, double phi) {
  return std::norm(dec.a + dec.b * std::polar(1.0, -phi));
}

double interference_coh(const PowerAllocation& alloc, const ChannelRealization& ch, std::size_t k,
                        const NetworkConfig& cfg) {
  const auto dec = decompose(alloc, ch, k, cfg);
  const double diff = std::abs(dec.a) - std::abs(dec.b);
  return diff * diff;
}

ConvexifiedConstraint freeze_convexified(const PowerAllocation& reference,
                                         const ChannelRealization& ch, std::size_t k,
                                         const NetworkConfig& cfg) {
  const auto dec = decompose(reference, ch, k, cfg);
  const auto sol = optimal_phase(dec, cfg.sampling_freq);
  const Complex h_rp = ch.relay(k).h_rp;
  const double sqrt_zeta = std::sqrt(cfg.zeta);
  const double relay_mag = std::sqrt(3.0) * std::abs(h_rp);
  const double rotated = dec.phi_b - sol.phi_opt;
  return {h_rp.real() * sqrt_zeta + relay_mag * std::cos(rotated),
          h_rp.imag() * sqrt_zeta + relay_mag * std::sin(rotated), sol.phi_opt};
}

double convexified_interference(const SqrtPower& p, const ChannelRealization& ch, std::size_t /*k*/,
                                const NetworkConfig& /*cfg*/, const ConvexifiedConstraint& frozen) {
  const double re = ch.h_sp.real() * p.p_s + frozen.f1 * p.p_r;
  const double im = ch.h_sp.imag() * p.p_s + frozen.f2 * p.p_r;
  return re * re + im * im;
}

CrossTermBound cross_term_bound(const SqrtPower& p, const ChannelRealization& ch, std::size_t k,
                                const NetworkConfig& cfg) {
  const RelayLinks& r = ch.relay(k);
  const double sz = std::sqrt(cfg.zeta);
  const double noise = std::sqrt(cfg.sigma2_relay) / std::sqrt(2.0);
  const double src_re = p.p_s * r.h_sr.real();
  const double src_im = p.p_s * r.h_sr.imag();
  const double loop_re = sz * p.p_r * r.h_rr.real();
  const double loop_im = sz * p.p_r * r.h_rr.imag();

  CrossTermBound out;
  out.half_l = src_re * loop_re + src_re * noise + loop_re * noise + src_im * loop_im +
               src_im * noise + loop_im * noise;
  out.inverse_gain_sq = p.p_s * p.p_s * std::norm(r.h_sr) +
                        cfg.zeta * p.p_r * p.p_r * std::norm(r.h_rr) + cfg.sigma2_relay;
  const Complex d = r.h_sr * p.p_s + r.h_rr * (sz * p.p_r) + Complex(noise, noise);
  out.d_norm_sq = std::norm(d);
  return out;
}

double b_approximation_ratio(const PowerAllocation& alloc, const ChannelRealization& ch,
                             std::size_t k, const NetworkConfig& cfg) {
  const auto dec = decompose(alloc, ch, k, cfg);
  return std::norm(dec.b) / (3.0 * alloc.p_r * std::norm(ch.relay(k).h_rp));
}

}  // namespace fdrelay
