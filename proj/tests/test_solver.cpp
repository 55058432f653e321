#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fdrelay/errors.hpp"
#include "fdrelay/phase.hpp"
#include "fdrelay/solver.hpp"
#include "test_util.hpp"

using namespace fdrelay;
using fdrelay::testing::one_relay;
using fdrelay::testing::single_relay_config;
using fdrelay::testing::unit_channels;

namespace {

NetworkConfig random_config(double zeta, double ibar_db = 8.0, double pmax_db = 20.0) {
  NetworkConfig cfg;
  cfg.num_relays = 1;
  cfg.zeta = zeta;
  cfg.i_bar_p = db_to_linear(ibar_db);
  cfg.set_p_max(db_to_linear(pmax_db));
  return cfg;
}

RelayResult relay_result(double rate) {
  RelayResult r;
  r.rate = rate;
  return r;
}

}  // namespace

TEST_CASE("1-D search") {
  auto [x, v] = solve_1d_convex([](double t) { return -(t - 3) * (t - 3); }, {0, 10}, 1e-8);
  CHECK(x == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(v == doctest::Approx(0.0));

  std::tie(x, v) = solve_1d_convex([](double t) { return t; }, {0, 5}, 1e-8);
  CHECK(x == 5.0);
  std::tie(x, v) = solve_1d_convex([](double t) { return -t; }, {0, 5}, 1e-8);
  CHECK(x == 0.0);
  std::tie(x, v) = solve_1d_convex([](double t) { return t; }, {2, 2}, 1e-8);
  CHECK(x == 2.0);
  CHECK_THROWS_AS(solve_1d_convex([](double t) { return t; }, {1, 0}, 1e-8), EmptyInterval);
}

TEST_CASE("1-D search matches a fine grid on the surrogate") {
  const auto cfg = random_config(0.01);
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const auto ch = sample_channels(cfg, seed);
    const double ps = 30.0;
    const auto obj = [&](double pr) { return rate_noncoh_obj({ps, pr}, ch, 0, cfg); };
    const Interval box{0, cfg.p_r_max};
    const int n = 1000000;
    const double h = box.hi / (n - 1);
    double best = -1;
    double arg = 0;
    for (int i = 0; i < n; ++i) {
      const double v = obj(i * h);
      if (v > best) {
        best = v;
        arg = i * h;
      }
    }
    const auto [x, v] = solve_1d_convex(obj, box, 1e-10);
    CHECK(std::abs(x - arg) <= 2 * h);
    CHECK(v >= best - 1e-12);
  }
}

TEST_CASE("non-coherent relay interval") {
  auto cfg = single_relay_config(0.0);
  cfg.i_bar_p = 6;
  cfg.p_r_max = 10;
  const auto ch = unit_channels();
  CHECK(feasible_interval_pr(0, ch, 0, cfg, Scenario::noncoherent) == Interval{0, 6});
  CHECK(feasible_interval_pr(6, ch, 0, cfg, Scenario::noncoherent) == Interval{0, 0});
  CHECK_THROWS_AS(feasible_interval_pr(7, ch, 0, cfg, Scenario::noncoherent), Infeasible);
  cfg.i_bar_p = 20;
  CHECK(feasible_interval_pr(0, ch, 0, cfg, Scenario::noncoherent) == Interval{0, 10});
}

TEST_CASE("coherent relay intervals satisfy the exact constraint") {
  const auto cfg = random_config(0.001);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const auto ch = sample_channels(cfg, rng());
    const double ps = cfg.p_s_max * u(rng);
    const auto set = feasible_relay_set(ps, ch, 0, cfg, Scenario::coherent);
    for (const auto& iv : set) {
      for (int j = 0; j <= 200; ++j) {
        const double pr = iv.lo + iv.width() * j / 200.0;
        CHECK(interference_coh({ps, pr}, ch, 0, cfg) <= cfg.i_bar_p + 1e-9);
      }
    }
  }
}

TEST_CASE("zero interference cap forces silence") {
  auto cfg = random_config(0.001);
  cfg.i_bar_p = 0;
  const auto ch = sample_channels(cfg, 3);
  for (auto sc : {Scenario::noncoherent, Scenario::coherent}) {
    const auto r = alternate_optimize(ch, 0, cfg, sc);
    CHECK(r.alloc == PowerAllocation{0, 0});
    CHECK(r.rate == 0.0);
    const auto b = brute_force(ch, 0, cfg, sc, 51);
    CHECK(b.alloc == PowerAllocation{0, 0});
    CHECK(b.rate == 0.0);
  }
}

TEST_CASE("unit-channel instance is close to the grid optimum") {
  auto cfg = random_config(0.001);
  const auto ch = unit_channels();
  for (auto sc : {Scenario::noncoherent, Scenario::coherent}) {
    const auto r = alternate_optimize(ch, 0, cfg, sc);
    const auto b = brute_force(ch, 0, cfg, sc, 201);
    CHECK(r.rate >= 0.99 * b.rate);
    CHECK(is_feasible(sc, r.alloc, ch, 0, cfg));
  }
}

TEST_CASE("ascent trace is nondecreasing and allocations are feasible") {
  const auto cfg = random_config(0.01);
  SolverOptions surrogate;
  surrogate.objective = Objective::surrogate;
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const auto ch = sample_channels(cfg, seed);
    for (auto sc : {Scenario::noncoherent, Scenario::coherent}) {
      for (const auto& opts : {SolverOptions{}, surrogate}) {
        const auto r = alternate_optimize(ch, 0, cfg, sc, opts);
        REQUIRE_FALSE(r.trace.empty());
        for (std::size_t i = 1; i < r.trace.size(); ++i)
          CHECK(r.trace[i].objective - r.trace[i - 1].objective >= -1e-10);
        CHECK(is_feasible(sc, r.alloc, ch, 0, cfg));
        CHECK(r.alloc.p_s <= cfg.p_s_max);
        CHECK(r.alloc.p_r <= cfg.p_r_max);
      }
    }
  }
}

TEST_CASE("solver options are validated") {
  SolverOptions o;
  o.max_outer_iters = 0;
  CHECK_THROWS_AS(o.validate(), ConfigError);
  o = {};
  o.grid_n = 1;
  CHECK_THROWS_AS(o.validate(), ConfigError);
  o = {};
  o.obj_tol = -1;
  CHECK_THROWS_AS(o.validate(), ConfigError);
}

TEST_CASE("grid oracle") {
  auto cfg = random_config(0.01, 30.0);
  const auto ch = sample_channels(cfg, 8);
  const auto corners = brute_force(ch, 0, cfg, Scenario::noncoherent, 2);
  double best = 0;
  for (double ps : {0.0, cfg.p_s_max})
    for (double pr : {0.0, cfg.p_r_max}) best = std::max(best, rate_exact({ps, pr}, ch, 0, cfg));
  CHECK(corners.rate == best);
  CHECK((corners.alloc.p_s == 0.0 || corners.alloc.p_s == cfg.p_s_max));
  CHECK((corners.alloc.p_r == 0.0 || corners.alloc.p_r == cfg.p_r_max));

  cfg.i_bar_p = db_to_linear(8);
  for (auto sc : {Scenario::noncoherent, Scenario::coherent}) {
    const double r101 = brute_force(ch, 0, cfg, sc, 101).rate;
    const double r201 = brute_force(ch, 0, cfg, sc, 201).rate;
    const double r401 = brute_force(ch, 0, cfg, sc, 401).rate;
    CHECK(r201 >= r101 - 1e-12);
    CHECK(r401 >= r201 - 1e-12);
  }
}

TEST_CASE("relay selection") {
  auto s = select_relay({relay_result(1.0), relay_result(2.0), relay_result(2.0)});
  CHECK(s.selected == 1);
  s = select_relay({relay_result(0.5)});
  CHECK(s.selected == 0);

  NetworkConfig cfg;
  cfg.num_relays = 8;
  const auto ch = sample_channels(cfg, 77);
  const auto res = solve(ch, cfg, Scenario::coherent);
  REQUIRE(res.per_relay.size() == 8);
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(res.per_relay[k].relay == k);
    CHECK(res.best().rate >= res.per_relay[k].rate);
  }
}

TEST_CASE("half-duplex comparator") {
  auto cfg = single_relay_config(0.0);
  cfg.i_bar_p = 0;
  const auto ch = sample_channels(cfg, 4);
  CHECK(hd_baseline(ch, 0, cfg).rate == 0.0);

  cfg.i_bar_p = db_to_linear(8);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rch = sample_channels(cfg, seed);
    const auto hd = hd_baseline(rch, 0, cfg);
    CHECK(rate_exact(hd.alloc, rch, 0, cfg) == doctest::Approx(2.0 * hd.rate));
    CHECK(hd.alloc.p_s * std::norm(rch.h_sp) <= cfg.i_bar_p * (1 + 1e-9));
    CHECK(hd.alloc.p_r * std::norm(rch.relay(0).h_rp) <= cfg.i_bar_p * (1 + 1e-9));
  }
}

TEST_CASE("full duplex beats half duplex on average at low self-interference") {
  const auto cfg = random_config(0.001);
  double fd = 0, hd = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto ch = sample_channels(cfg, seed);
    fd += alternate_optimize(ch, 0, cfg, Scenario::coherent).rate;
    hd += hd_baseline(ch, 0, cfg).rate;
  }
  CHECK(fd > hd);
}

TEST_CASE("ideal cancellation") {
  auto cfg = single_relay_config(0.0);
  cfg.i_bar_p = 1e9;
  const auto ch = sample_channels(cfg, 5);
  const auto coh = solve_zeta_zero(ch, 0, cfg, Scenario::coherent);
  CHECK(coh.alloc.p_r == doctest::Approx(cfg.p_r_max));

  SolverOptions opts;
  opts.objective = Objective::surrogate;
  const auto sym = one_relay({0, 1}, {1, 0}, {1, 0}, {0.3, 0.3}, {1, 0});
  const auto r = solve_zeta_zero(sym, 0, cfg, Scenario::noncoherent, opts);
  CHECK(r.alloc.p_s / r.alloc.p_r == doctest::Approx(1.0));
  double best = -1, best_ratio = 0;
  for (int i = 1; i <= 100; ++i)
    for (int j = 1; j <= 100; ++j) {
      const PowerAllocation a{cfg.p_s_max * i / 100, cfg.p_r_max * j / 100};
      const double v = rate_high_snr_obj(a, sym, 0, cfg);
      if (v > best) {
        best = v;
        best_ratio = a.p_s / a.p_r;
      }
    }
  CHECK(best_ratio == doctest::Approx(1.0));

  cfg.i_bar_p = db_to_linear(8);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rch = sample_channels(cfg, seed);
    for (auto sc : {Scenario::noncoherent, Scenario::coherent}) {
      const auto z = solve_zeta_zero(rch, 0, cfg, sc);
      const auto b = brute_force(rch, 0, cfg, sc, 201);
      CHECK(z.rate >= 0.99 * b.rate);
    }
  }
}

TEST_CASE("ideal-cancellation routing errors") {
  auto cfg = single_relay_config(0.0);
  const auto ch = sample_channels(cfg, 6);
  CHECK_THROWS_AS(alternate_optimize(ch, 0, cfg, Scenario::noncoherent), ZetaHatZero);
  CHECK_NOTHROW(solve_relay(ch, 0, cfg, Scenario::noncoherent));
  cfg.zeta = 0.01;
  CHECK_THROWS_AS(solve_zeta_zero(ch, 0, cfg, Scenario::coherent), DomainError);
}
