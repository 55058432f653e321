#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fdrelay/config.hpp"

namespace fdrelay {

using Complex = std::complex<double>;

/// Per-relay coefficients of one draw.
struct RelayLinks {
  Complex h_sr;  ///< source -> relay
  Complex h_rd;  ///< relay -> destination
  Complex h_rp;  ///< relay -> PU receiver
  Complex h_rr;  ///< relay self-interference loop
  double var_rp = 1.0;
};

/// One draw of every channel coefficient for K relays. Immutable after
/// sampling; the direct link h_sd is kept but never enters rate or
/// interference.
struct ChannelRealization {
  Complex h_sp;
  Complex h_sd;
  double var_sp = 1.0;
  std::vector<RelayLinks> relays;
  std::uint64_t seed = 0;

  [[nodiscard]] std::size_t num_relays() const { return relays.size(); }
  [[nodiscard]] const RelayLinks& relay(std::size_t k) const { return relays.at(k); }

  /// FNV-1a over the coefficient bytes; used to audit paired realizations.
  [[nodiscard]] std::uint64_t digest() const;
};

/// Draws circularly-symmetric complex Gaussian coefficients with the
/// configured variances. var_sp and each var_rp are drawn uniformly from
/// their intervals first. Deterministic in (config, seed).
ChannelRealization sample_channels(const NetworkConfig& cfg, std::uint64_t seed);

}  // namespace fdrelay
