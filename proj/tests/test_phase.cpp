#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fdrelay/phase.hpp"
#include "test_util.hpp"

using namespace fdrelay;
using fdrelay::testing::one_relay;
using fdrelay::testing::single_relay_config;
using fdrelay::testing::unit_channels;

namespace {

constexpr double kPi = std::numbers::pi;

CoherentDecomposition dec_of(Complex a, Complex b) {
  return {a, b, std::arg(a), std::arg(b)};
}

}  // namespace

TEST_CASE("optimal phase on hand-picked components") {
  auto s = optimal_phase(dec_of({1, 0}, {1, 0}));
  CHECK(s.phi_opt == doctest::Approx(kPi));
  CHECK(s.i_coh == doctest::Approx(0.0));

  s = optimal_phase(dec_of({2, 0}, {0, 1}));
  CHECK(s.phi_opt == doctest::Approx(1.5 * kPi));
  CHECK(s.i_coh == doctest::Approx(1.0));

  s = optimal_phase(dec_of({0, 1}, {1, 0}));
  CHECK(s.phi_opt == doctest::Approx(0.5 * kPi));

  s = optimal_phase(dec_of({0, 0}, {0, 0}));
  CHECK(s.phi_opt == kPi);
  CHECK(s.i_coh == 0.0);
}

TEST_CASE("delay stays inside one sampling period") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n;
  for (int i = 0; i < 1000; ++i) {
    const auto s = optimal_phase(dec_of({n(rng), n(rng)}, {n(rng), n(rng)}), 1e6);
    CHECK(s.phi_opt >= 0.0);
    CHECK(s.phi_opt < 2 * kPi);
    CHECK(s.delay >= 0.0);
    CHECK(s.delay < 1e-6);
    CHECK(s.delay == doctest::Approx(s.phi_opt / (2 * kPi * 1e6)));
  }
}

TEST_CASE("decomposition without the relay") {
  auto cfg = single_relay_config(0.0);
  const auto ch = one_relay({1, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 2});
  const auto dec = decompose({4, 0}, ch, 0, cfg);
  CHECK(dec.a.real() == doctest::Approx(0.0));
  CHECK(dec.a.imag() == doctest::Approx(4.0));
  CHECK(std::abs(dec.b) == 0.0);
  CHECK(interference_coh({4, 0}, ch, 0, cfg) == doctest::Approx(16.0));
}

TEST_CASE("decomposition matches the received PU signal") {
  NetworkConfig cfg;
  cfg.num_relays = 1;
  cfg.zeta = 0.02;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const auto ch = sample_channels(cfg, rng());
    const auto& r = ch.relay(0);
    const PowerAllocation a{u(rng), u(rng)};
    const double phi = 2 * kPi * u(rng) / 50.0;
    const double g = relay_gain(a, ch, 0, cfg);
    const Complex noise = Complex(1, 1) * std::sqrt(cfg.sigma2_relay / 2);
    const Complex rx = ch.h_sp * std::sqrt(a.p_s) + r.h_rp * std::sqrt(cfg.zeta * a.p_r) +
                       r.h_rp * g * std::sqrt(a.p_r) *
                           (r.h_sr * std::sqrt(a.p_s) + r.h_rr * std::sqrt(cfg.zeta * a.p_r) + noise) *
                           std::polar(1.0, -phi);
    const auto dec = decompose(a, ch, 0, cfg);
    CHECK(interference_at_phase(dec, phi) ==
          doctest::Approx(std::norm(rx)).epsilon(1e-10));
  }
}

TEST_CASE("cosine law and grid search agree with the closed form") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  const int grid = 10000;
  for (int i = 0; i < 200; ++i) {
    const auto dec = dec_of({n(rng), n(rng)}, {n(rng), n(rng)});
    const double ma = std::abs(dec.a);
    const double mb = std::abs(dec.b);
    const auto sol = optimal_phase(dec);
    double grid_min = 1e300;
    for (int j = 0; j < grid; ++j) {
      const double phi = 2 * kPi * j / grid;
      const double v = interference_at_phase(dec, phi);
      const double law = ma * ma + mb * mb + 2 * ma * mb * std::cos(dec.phi_a - dec.phi_b + phi);
      CHECK(v == doctest::Approx(law).epsilon(1e-9).scale(ma * ma + mb * mb));
      grid_min = std::min(grid_min, v);
    }
    CHECK(sol.i_coh <= grid_min + 1e-12);
    CHECK(interference_at_phase(dec, sol.phi_opt) ==
          doctest::Approx(sol.i_coh).scale(ma * ma + mb * mb));
  }
}

TEST_CASE("coherent interference never exceeds the phase-free value") {
  NetworkConfig cfg;
  cfg.num_relays = 1;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const auto ch = sample_channels(cfg, rng());
    const PowerAllocation a{u(rng), u(rng)};
    const auto dec = decompose(a, ch, 0, cfg);
    CHECK(interference_coh(a, ch, 0, cfg) <= interference_at_phase(dec, 0.0) + 1e-9);
  }
}

TEST_CASE("relay cross terms are bounded by the inverse gain") {
  NetworkConfig cfg;
  cfg.num_relays = 1;
  cfg.zeta = 0.1;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const auto ch = sample_channels(cfg, rng());
    const SqrtPower p{u(rng), u(rng)};
    const auto t = cross_term_bound(p, ch, 0, cfg);
    CHECK(t.half_l <= t.inverse_gain_sq * (1 + 1e-12));
    CHECK(t.d_norm_sq == doctest::Approx(t.inverse_gain_sq + 2 * t.half_l).scale(t.d_norm_sq));
    CHECK(t.d_norm_sq <= 3 * t.inverse_gain_sq * (1 + 1e-12));
  }
}

TEST_CASE("forwarded component stays below the quadratic stand-in") {
  NetworkConfig cfg;
  cfg.num_relays = 1;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.01, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const auto ch = sample_channels(cfg, rng());
    CHECK(b_approximation_ratio({u(rng), u(rng)}, ch, 0, cfg) <= 1.0 + 1e-12);
  }
}

TEST_CASE("convexified constraint example") {
  auto cfg = single_relay_config(0.0);
  const auto ch = unit_channels();
  const auto frozen = freeze_convexified({1, 1}, ch, 0, cfg);
  CHECK(frozen.f1 == doctest::Approx(-std::sqrt(3.0)));
  CHECK(frozen.f2 == doctest::Approx(0.0));
  CHECK(convexified_interference({std::sqrt(3.0), 1}, ch, 0, cfg, frozen) ==
        doctest::Approx(0.0));
  CHECK(convexified_interference({1, 0}, ch, 0, cfg, frozen) == doctest::Approx(1.0));
  CHECK(convexified_interference({0, 1}, ch, 0, cfg, frozen) == doctest::Approx(3.0));
}

TEST_CASE("convexified constraint is a convex quadratic") {
  NetworkConfig cfg;
  cfg.num_relays = 1;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const auto ch = sample_channels(cfg, rng());
    const auto frozen = freeze_convexified({u(rng), u(rng)}, ch, 0, cfg);
    const SqrtPower p{u(rng), u(rng)};
    const SqrtPower q{u(rng), u(rng)};
    const SqrtPower mid{(p.p_s + q.p_s) / 2, (p.p_r + q.p_r) / 2};
    const double fp = convexified_interference(p, ch, 0, cfg, frozen);
    const double fq = convexified_interference(q, ch, 0, cfg, frozen);
    CHECK(convexified_interference(mid, ch, 0, cfg, frozen) <= (fp + fq) / 2 + 1e-9);
  }
}
