#include "fdrelay/channel.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace fdrelay {

namespace {

class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double uniform(const Interval& r) {
    return std::uniform_real_distribution<double>(r.lo, r.hi)(engine_);
  }

  Complex complex_gaussian(double variance) {
    std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
    const double re = normal(engine_);
    const double im = normal(engine_);
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
};

void mix(std::uint64_t& hash, double value) {
  const auto bits = std::bit_cast<std::uint64_t>(value);
  for (int byte = 0; byte < 8; ++byte) {
    hash ^= (bits >> (8 * byte)) & 0xffU;
    hash *= 0x100000001b3ULL;
  }
}

void mix(std::uint64_t& hash, Complex z) {
  mix(hash, z.real());
  mix(hash, z.imag());
}

}  // namespace

std::uint64_t ChannelRealization::digest() const {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  mix(hash, h_sp);
  mix(hash, h_sd);
  for (const auto& r : relays) {
    mix(hash, r.h_sr);
    mix(hash, r.h_rd);
    mix(hash, r.h_rp);
    mix(hash, r.h_rr);
  }
  return hash;
}

ChannelRealization sample_channels(const NetworkConfig& cfg, std::uint64_t seed) {
  GaussianSource rng(seed);
  ChannelRealization ch;
  ch.seed = seed;
  ch.var_sp = rng.uniform(cfg.var_sp_range);
  ch.h_sp = rng.complex_gaussian(ch.var_sp);
  ch.h_sd = rng.complex_gaussian(cfg.var_sd);
  ch.relays.reserve(cfg.num_relays);
  for (std::size_t k = 0; k < cfg.num_relays; ++k) {
    RelayLinks r;
    r.var_rp = rng.uniform(cfg.var_rp_range);
    r.h_sr = rng.complex_gaussian(cfg.var_sr);
    r.h_rd = rng.complex_gaussian(cfg.var_rd);
    r.h_rp = rng.complex_gaussian(r.var_rp);
    r.h_rr = rng.complex_gaussian(cfg.var_rr);
    ch.relays.push_back(r);
  }
  return ch;
}

}  // namespace fdrelay
