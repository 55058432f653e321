#pragma once

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "fdrelay/interval.hpp"

namespace fdrelay {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

/// Scalar parameters of the network. Every power-like quantity is linear.
struct NetworkConfig {
  std::size_t num_relays = 8;
  double zeta = 0.001;  ///< residual self-interference fraction
  double sigma2_relay = 1.0;
  double sigma2_dest = 1.0;
  double sigma2_pu = 1.0;  ///< stored; the interference constraint has no noise term
  double var_sr = 1.0;
  double var_rd = 1.0;
  double var_sd = 0.1;
  double var_rr = 1.0;
  Interval var_sp_range{0.8, 1.0};
  Interval var_rp_range{0.8, 1.0};
  double p_s_max = 100.0;  // 20 dB
  double p_r_max = 100.0;
  double i_bar_p = 6.309573444801933;  // 8 dB
  double sampling_freq = 1.0e6;

  /// Throws ConfigError naming the offending field.
  void validate() const;

  /// Sets both power caps.
  void set_p_max(double linear) {
    p_s_max = linear;
    p_r_max = linear;
  }
};

/// Parses the flat `key = value` format. Keys mirror NetworkConfig fields;
/// a `_db` suffix is accepted on power, noise and cap keys (and `p_max[_db]`
/// sets both caps). Ranges are written `lo, hi`. `#` starts a comment.
/// Unspecified keys keep their defaults. Errors carry `source:line`.
NetworkConfig parse_config(std::istream& in, const std::string& source = "<stream>");
NetworkConfig load_config(const std::filesystem::path& path);

std::string to_config_text(const NetworkConfig& cfg);

}  // namespace fdrelay
