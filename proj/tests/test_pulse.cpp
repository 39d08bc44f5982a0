#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pairprod/pulse.hpp"
#include "test_util.hpp"

using namespace pairprod;
using testutil::uniform;

namespace {

PulseConfig random_pulse(PulseKind kind) {
  PulseConfig p;
  p.kind = kind;
  p.E0 = uniform(0.05, 2.0);
  p.tau0 = uniform(0.5, 5.0);
  p.t0 = uniform(0.5, 5.0);
  p.sigma = uniform(-0.85, 0.85);
  if (kind != PulseKind::SauterLike) {
    p.omega = uniform(0.1, 3.0);
    p.chi = uniform(0.0, 2.0 * M_PI);
  }
  if (kind == PulseKind::Elliptic) p.delta = uniform(0.0, M_PI / 4.0);
  return p;
}

}  // namespace

TEST_CASE("envelope values") {
  PulseConfig p = testutil::sauter_pulse(1.0, 3.0, 0.0);
  CHECK(envelope(p, 0.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(envelope(p, 1e9) == 0.0);
  CHECK(envelope(p, -1e9) == 0.0);

  p.sigma = 0.8;
  CHECK(envelope(p, 0.0) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("potential values and limits") {
  PulseConfig p = testutil::strong_sym_pulse();  // E0 = 1.5
  const Eigen::Vector3d a0 = eval_potential(p, 0.0);
  CHECK((a0 - 4.5 * Eigen::Vector3d::UnitX()).norm() < 1e-12);

  for (PulseKind kind :
       {PulseKind::SauterLike, PulseKind::Oscillating, PulseKind::Elliptic}) {
    PulseConfig q = random_pulse(kind);
    CHECK(eval_potential(q, 1e6 * q.tau0).norm() < 1e-300);
    CHECK(eval_potential(q, -1e6 * q.tau0).norm() < 1e-300);
  }
}

TEST_CASE("elliptic with delta = 0 reduces to the oscillating pulse") {
  PulseConfig osc = testutil::oscillating_pulse(0.7);
  osc.chi = 0.3;
  PulseConfig ell = osc;
  ell.kind = PulseKind::Elliptic;
  ell.delta = 0.0;
  for (double t = -15.0; t <= 40.0; t += 0.37) {
    CHECK((eval_potential(osc, t) - eval_potential(ell, t)).norm() == 0.0);
    CHECK((eval_field(osc, t) - eval_field(ell, t)).norm() == 0.0);
  }
}

TEST_CASE("symmetric pulse: field extrema at +-tau0 atanh(1/sqrt 2) with |E| = E0/2") {
  PulseConfig p = testutil::strong_sym_pulse();
  const double t_star = p.tau0 * std::atanh(1.0 / std::sqrt(2.0));
  CHECK(t_star == doctest::Approx(2.64).epsilon(1e-2));
  for (double s : {-1.0, 1.0}) {
    CHECK(std::abs(eval_field(p, s * t_star).norm() - p.E0 / 2.0) < 1e-12);
  }
  // Those are the global extrema of |E|.
  double best = 0.0, t_best = 0.0;
  for (double t = -20.0; t <= 20.0; t += 1e-3) {
    const double v = eval_field(p, t).norm();
    if (v > best) { best = v; t_best = t; }
  }
  CHECK(std::abs(std::abs(t_best) - t_star) < 2e-3);
  CHECK(best <= p.E0 / 2.0 + 1e-10);
  // Symmetric envelope: E is odd, so E(0) = 0.
  CHECK(eval_field(p, 0.0).norm() < 1e-14);
}

TEST_CASE("asymmetric pulse: dominant extremum near t = -2 with |E| ~ 0.7") {
  PulseConfig p = testutil::strong_asym_pulse();  // sigma = 0.8, E0 = 0.5
  double best = 0.0, t_best = 0.0;
  for (double t = -20.0; t <= 60.0; t += 1e-3) {
    const double v = eval_field(p, t).norm();
    if (v > best) { best = v; t_best = t; }
  }
  CHECK(std::abs(t_best - (-2.0)) < 0.15);
  CHECK(best == doctest::Approx(0.7).epsilon(0.01));
  // The chain-rule term makes |E| exceed E0.
  CHECK(best > p.E0);
  // eA at the dominant extremum gives the classical momentum ~ -0.8.
  CHECK(kElectronCharge * eval_potential(p, t_best).x() ==
        doctest::Approx(-0.8).epsilon(0.01));
}

TEST_CASE("analytic field matches central differences") {
  const double h = 1e-4;
  for (PulseKind kind :
       {PulseKind::SauterLike, PulseKind::Oscillating, PulseKind::Elliptic}) {
    for (int rep = 0; rep < 3; ++rep) {
      PulseConfig p = random_pulse(kind);
      double max_e = 0.0;
      for (double t = -30.0; t <= 60.0; t += 0.01) {
        max_e = std::max(max_e, eval_field(p, t).norm());
      }
      double worst = 0.0;
      for (double t = -30.0; t <= 60.0; t += 0.11) {
        const Eigen::Vector3d fd =
            -(eval_potential(p, t + h) - eval_potential(p, t - h)) / (2.0 * h);
        worst = std::max(worst, (eval_field(p, t) - fd).norm());
      }
      CHECK(worst <= 1e-6 * max_e);
    }
  }
}

TEST_CASE("net impulse vanishes and quadrature matches the analytic potential") {
  for (PulseKind kind :
       {PulseKind::SauterLike, PulseKind::Oscillating, PulseKind::Elliptic}) {
    for (int rep = 0; rep < 8; ++rep) {
      PulseConfig p = random_pulse(kind);
      const TimeWindow w = integration_window(p);
      CHECK(net_impulse(p, w.t_i, w.t_f).norm() <= 1e-10);

      // Fundamental theorem of calculus on a half window.
      const Eigen::Vector3d expected =
          eval_potential(p, w.t_i) - eval_potential(p, 0.0);
      CHECK((net_impulse(p, w.t_i, 0.0) - expected).norm() <= 1e-10);
    }
  }
}

TEST_CASE("integration window covers the published run window") {
  // sigma = 0.8, tau0 = t0 = 3: reference runs used [-20, 200].
  PulseConfig p = testutil::strong_asym_pulse();
  const TimeWindow w = integration_window(p, 1e-9);
  CHECK(w.t_i <= -20.0);
  CHECK(w.t_f >= 200.0);

  double max_a = 0.0, max_e = 0.0;
  for (double t = -30.0; t <= 250.0; t += 0.01) {
    max_a = std::max(max_a, eval_potential(p, t).norm());
    max_e = std::max(max_e, eval_field(p, t).norm());
  }
  for (double edge : {w.t_i, w.t_f}) {
    CHECK(eval_potential(p, edge).norm() <= 1e-9 * max_a);
    CHECK(eval_field(p, edge).norm() <= 1e-9 * max_e);
  }
}

TEST_CASE("window is symmetric for symmetric pulses and monotone in eps") {
  PulseConfig p = testutil::sauter_pulse(1.0, 1.0, 0.0);
  const TimeWindow w = integration_window(p, 1e-9);
  CHECK(std::abs(w.t_i + w.t_f) < 1e-6 * std::abs(w.t_f));

  const TimeWindow tighter = integration_window(p, 1e-12);
  CHECK(tighter.t_i <= w.t_i);
  CHECK(tighter.t_f >= w.t_f);

  CHECK_THROWS_AS(integration_window(p, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(integration_window(p, 0.0), std::invalid_argument);
}

TEST_CASE("circular polarization magnitude identity") {
  PulseConfig p = testutil::circular_pulse(0.5);
  for (double t = -10.0; t <= 30.0; t += 0.23) {
    const double a2 = eval_potential(p, t).squaredNorm();
    const double env = p.E0 * envelope(p, t);
    CHECK(a2 == doctest::Approx(env * env / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("validation rejects bad parameters by name") {
  PulseConfig p = testutil::strong_asym_pulse();
  p.sigma = 1.2;
  CHECK_THROWS_WITH_AS(p.validate(),
                       doctest::Contains("sigma"), std::invalid_argument);
  p = testutil::strong_asym_pulse();
  p.eps2 = Eigen::Vector3d::UnitX();  // not orthogonal
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = testutil::strong_asym_pulse();
  p.tau0 = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
