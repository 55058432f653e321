#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/LU>

#include "fdrelay/analysis.hpp"
#include "fdrelay/errors.hpp"
#include "test_util.hpp"

using namespace fdrelay;
using fdrelay::testing::single_relay_config;
using fdrelay::testing::unit_channels;

namespace {

struct Instance {
  ChannelRealization ch;
  NetworkConfig cfg;
};

Instance random_instance(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Instance in;
  in.cfg.num_relays = 1;
  in.cfg.zeta = std::pow(10.0, -4 + 4 * u(rng));
  in.cfg.sigma2_dest = std::pow(10.0, -1 + 2 * u(rng));
  in.cfg.sigma2_relay = std::pow(10.0, -1 + 2 * u(rng));
  in.ch = sample_channels(in.cfg, rng());
  return in;
}

double log_uniform_power(std::mt19937_64& rng) {
  return std::pow(10.0, -2 + 4 * std::uniform_real_distribution<double>(0, 1)(rng));
}

void check_close(const Eigen::Matrix2d& a, const Eigen::Matrix2d& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double scale = std::max({std::abs(a(i, j)), 1e-3 * a.cwiseAbs().maxCoeff(), 1e-300});
      CHECK(std::abs(a(i, j) - b(i, j)) <= 1e-4 * scale);
    }
}

}  // namespace

TEST_CASE("classification of 2x2 matrices") {
  Eigen::Matrix2d m;
  m << -2, 0, 0, -1;
  CHECK(classify(m) == Definiteness::negative_definite);
  m << 2, 0, 0, 1;
  CHECK(classify(m) == Definiteness::positive_definite);
  m << 1, 2, 2, 1;
  CHECK(classify(m) == Definiteness::indefinite);
  m << 1, 1, 1, 1;
  CHECK(classify(m) == Definiteness::positive_semidefinite);
  m << -1, 1, 1, -1;
  CHECK(classify(m) == Definiteness::negative_semidefinite);
  m.setZero();
  CHECK(classify(m) == Definiteness::zero);
  CHECK(std::string(to_string(Definiteness::indefinite)) == "indefinite");
}

TEST_CASE("threshold coefficients on unit channels") {
  auto cfg = single_relay_config(1.0);
  const auto ch = unit_channels();
  const auto t = threshold_ps(ch, 0, cfg, 1.0);
  CHECK(t.a == doctest::Approx(23.0));
  CHECK(t.b == doctest::Approx(6.0));
  CHECK(t.c == doctest::Approx(-2.0));
  CHECK(t.omega == doctest::Approx(36.0 + 184.0));
  CHECK(t.p_s2 == doctest::Approx((-6.0 + std::sqrt(220.0)) / 46.0));
  CHECK(t.p_s1 < 0.0);
  // exact determinant sign change: P_R^2 d zeta_hat (P_R d + s2) / (s s2 (3 P_R d + 4 s2))
  CHECK(t.exact == doctest::Approx(2.0 / 7.0));
}

TEST_CASE("threshold roots") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto in = random_instance(rng);
    const auto t = threshold_ps(in.ch, 0, in.cfg, log_uniform_power(rng));
    CHECK(t.p_s2 > 0.0);
    CHECK(std::abs(t.a * t.p_s2 * t.p_s2 + t.b * t.p_s2 + t.c) <= 1e-9 * std::abs(t.c));
    CHECK(t.exact > 0.0);
  }
}

TEST_CASE("determinant sign around the exact threshold") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const auto in = random_instance(rng);
    const double pr = log_uniform_power(rng);
    const auto t = threshold_ps(in.ch, 0, in.cfg, pr);
    CHECK(sc1({0.5 * t.exact, pr}, in.ch, 0, in.cfg) < 0.0);
    CHECK(sc1({2.0 * t.exact, pr}, in.ch, 0, in.cfg) > 0.0);
    CHECK(sc1_paper_form({2.0 * t.p_s2, pr}, in.ch, 0, in.cfg) > 0.0);
    CHECK(sc1_paper_form({0.5 * t.p_s2, pr}, in.ch, 0, in.cfg) < 0.0);
  }
}

TEST_CASE("closed-form Hessians are symmetric and match finite differences") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto in = random_instance(rng);
    const double ps = log_uniform_power(rng);
    const double pr = log_uniform_power(rng);
    const auto g = link_gains(in.ch, 0, in.cfg);

    const auto hf = hessian_noncoh({ps, pr}, in.ch, 0, in.cfg);
    CHECK(hf.h12() == hf.h21());
    check_close(hf.h, numeric_reciprocal_hessian(ReciprocalKind::f, g, ps, pr));

    const auto hg = hessian_coh({ps, pr}, in.ch, 0, in.cfg);
    CHECK(hg.h12() == hg.h21());
    check_close(hg.h, numeric_reciprocal_hessian(ReciprocalKind::g, g, ps, pr));

    const auto ht = hessian_high_snr({ps, pr}, in.ch, 0, in.cfg);
    CHECK(ht.h12() == ht.h21());
    check_close(ht.h, numeric_reciprocal_hessian(ReciprocalKind::f_tilde, g, ps, pr));
    CHECK((ht.definiteness == Definiteness::negative_semidefinite ||
           ht.definiteness == Definiteness::negative_definite));
  }
}

TEST_CASE("determinant sign matches the numeric Hessian") {
  std::mt19937_64 rng(4);
  int compared = 0;
  for (int i = 0; i < 500; ++i) {
    const auto in = random_instance(rng);
    const double ps = log_uniform_power(rng);
    const double pr = log_uniform_power(rng);
    const auto num = numeric_reciprocal_hessian(ReciprocalKind::f, link_gains(in.ch, 0, in.cfg),
                                                ps, pr);
    const double det = num.determinant();
    const double scale = std::abs(num(0, 0) * num(1, 1)) + num(0, 1) * num(0, 1);
    if (std::abs(det) < 1e-3 * scale) continue;
    ++compared;
    CHECK((sc1({ps, pr}, in.ch, 0, in.cfg) > 0) == (det > 0));
  }
  CHECK(compared > 400);
}

TEST_CASE("Hessians reject the boundary and ideal cancellation") {
  auto cfg = single_relay_config(0.01);
  const auto ch = unit_channels();
  CHECK_THROWS_AS(hessian_noncoh({0, 1}, ch, 0, cfg), DomainError);
  CHECK_THROWS_AS(hessian_noncoh({1, 0}, ch, 0, cfg), DomainError);
  CHECK_THROWS_AS(hessian_coh({0, 1}, ch, 0, cfg), DomainError);
  CHECK_THROWS_AS(hessian_high_snr({1, 0}, ch, 0, cfg), DomainError);
  cfg.zeta = 0;
  CHECK_THROWS_AS(hessian_noncoh({1, 1}, ch, 0, cfg), DomainError);
  CHECK_NOTHROW(hessian_high_snr({1, 1}, ch, 0, cfg));
}

TEST_CASE("coherent thresholds and witness") {
  auto cfg = single_relay_config(1.0);
  const auto ch = unit_channels();
  const auto t = thresholds_coh(ch, 0, cfg, 0.5);
  CHECK(t.p_rk_tilde == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(t.p_s1 == doctest::Approx(std::sqrt(1.0 / 6.0) * 0.5));
  CHECK(t.p_s_tilde == std::min(t.p_s1, t.p_s2));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto in = random_instance(rng);
    const auto w = sc2_witness(in.ch, 0, in.cfg);
    REQUIRE(w.sc2 < 0.0);
    CHECK(sc2(w.point, in.ch, 0, in.cfg) == w.sc2);
    const auto num = numeric_reciprocal_hessian(ReciprocalKind::g, link_gains(in.ch, 0, in.cfg),
                                                w.point.p_s, w.point.p_r);
    CHECK(num.determinant() < 0.0);
    const SqrtPower half{w.point.p_s / 2, w.point.p_r / 2};
    CHECK(sc2(half, in.ch, 0, in.cfg) < 0.0);
  }
}

TEST_CASE("convexified curvature") {
  auto cfg = single_relay_config(0.0);
  const auto ch = unit_channels();
  const auto frozen = freeze_convexified({1, 1}, ch, 0, cfg);
  const auto c = convexified_curvature(ch, frozen);
  CHECK(c.d_ss == doctest::Approx(2.0));
  CHECK(c.d_rr == doctest::Approx(6.0));
}

TEST_CASE("lemma suite and calculus checks pass on a small budget") {
  LemmaSuiteOptions opts;
  opts.interior_points = 500;
  opts.witness_draws = 20;
  opts.phase_instances = 50;
  opts.phase_grid = 2000;
  const auto outcomes = run_lemma_suite(opts);
  CHECK(outcomes.size() == 7);
  for (const auto& o : outcomes) {
    INFO(o.name << ": " << o.detail);
    CHECK(o.passed);
    CHECK(o.checked > 0);
  }
  const auto calc = check_calculus(100, 9);
  INFO(calc.worst_quantity);
  CHECK(calc.failures == 0);
  CHECK(calc.checked > 0);
}
