#include "fdrelay/model.hpp"

#include <complex>

#include "fdrelay/errors.hpp"

namespace fdrelay {

LinkGains<double> link_gains(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg) {
  const RelayLinks& r = ch.relay(k);
  return {std::norm(r.h_sr), std::norm(r.h_rd), std::norm(r.h_rr), std::norm(ch.h_sp),
          std::norm(r.h_rp), cfg.zeta,          cfg.sigma2_relay,   cfg.sigma2_dest};
}

double zeta_hat(const ChannelRealization& ch, std::size_t k, const NetworkConfig& cfg) {
  return std::norm(ch.relay(k).h_rr) * cfg.zeta;
}

DerivedQuantities derived_quantities(const PowerAllocation& alloc, const ChannelRealization& ch,
                                     std::size_t k, const NetworkConfig& cfg) {
  return {zeta_hat(ch, k, cfg), relay_gain(alloc, ch, k, cfg)};
}

double relay_gain(const PowerAllocation& alloc, const ChannelRealization& ch, std::size_t k,
                  const NetworkConfig& cfg) {
  return 1.0 / std::sqrt(kernel::inverse_gain_sq(link_gains(ch, k, cfg), alloc.p_s, alloc.p_r));
}

double sinr_exact(const PowerAllocation& alloc, const ChannelRealization& ch, std::size_t k,
                  const NetworkConfig& cfg) {
  return kernel::sinr_exact(link_gains(ch, k, cfg), alloc.p_s, alloc.p_r);
}

double rate_exact(const PowerAllocation& alloc, const ChannelRealization& ch, std::size_t k,
                  const NetworkConfig& cfg) {
  return std::log2(1.0 + sinr_exact(alloc, ch, k, cfg));
}

double rate_noncoh_obj(const PowerAllocation& alloc, const ChannelRealization& ch, std::size_t k,
                       const NetworkConfig& cfg) {
  const auto g = link_gains(ch, k, cfg);
  if (g.zeta_hat() == 0.0) throw ZetaHatZero();
  return kernel::sinr_noncoh_surrogate(g, alloc.p_s, alloc.p_r);
}

double rate_coh_obj(const SqrtPower& p, const ChannelRealization& ch, std::size_t k,
                    const NetworkConfig& cfg) {
  return rate_noncoh_obj(p.power(), ch, k, cfg);
}

double rate_high_snr_obj(const PowerAllocation& alloc, const ChannelRealization& ch,
                         std::size_t k, const NetworkConfig& cfg) {
  return kernel::sinr_high_snr(link_gains(ch, k, cfg), alloc.p_s, alloc.p_r);
}

double rate_coh_zeta_zero_obj(const SqrtPower& p, const ChannelRealization& ch, std::size_t k,
                              const NetworkConfig& cfg) {
  return std::norm(ch.relay(k).h_rd) * p.p_r * p.p_r / cfg.sigma2_dest;
}

double interference_noncoh(const PowerAllocation& alloc, const ChannelRealization& ch,
                           std::size_t k, const NetworkConfig& cfg) {
  return kernel::interference_noncoh(link_gains(ch, k, cfg), alloc.p_s, alloc.p_r);
}

}  // namespace fdrelay
