#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "pairprod/odeint.hpp"
#include "test_util.hpp"

using namespace pairprod;
using complexd = std::complex<double>;

namespace {

// Smooth Hermitian generator for unitarity checks.
Eigen::Matrix4cd test_hamiltonian(double t) {
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  const complexd i{0.0, 1.0};
  h(0, 0) = 1.1;
  h(1, 1) = -0.4;
  h(2, 2) = 0.7;
  h(3, 3) = -1.3;
  h(0, 1) = 0.5 * std::exp(i * (0.3 * t));
  h(1, 0) = std::conj(h(0, 1));
  h(1, 2) = 0.8 * std::cos(t);
  h(2, 1) = std::conj(h(1, 2));
  h(2, 3) = complexd(0.2, 0.6) * std::sin(0.5 * t);
  h(3, 2) = std::conj(h(2, 3));
  return h;
}

}  // namespace

TEST_CASE("zero rhs keeps the state exactly") {
  const auto rhs = [](double, const Eigen::Vector3d&) {
    return Eigen::Vector3d::Zero().eval();
  };
  const Eigen::Vector3d y0(0.3, -1.7, 2.9);
  const Eigen::Vector3d y = integrate(rhs, y0, 0.0, 10.0, IntegratorSpec{});
  CHECK(y == y0);
}

TEST_CASE("periodic phase evolution returns to the start") {
  const double omega = 2.3;
  const auto rhs = [&](double, const Eigen::Vector2cd& y) {
    return Eigen::Vector2cd(complexd(0.0, omega) * y(0), complexd(0.0, 0.0));
  };
  Eigen::Vector2cd y0(1.0, 0.0);
  const auto y = integrate(rhs, y0, 0.0, 2.0 * M_PI / omega, IntegratorSpec{});
  CHECK(std::abs(y(0) - 1.0) < 1e-9);
}

TEST_CASE("Hermitian generator conserves the norm to 1e-9") {
  const auto rhs = [](double t, const Eigen::Vector4cd& c) {
    return Eigen::Vector4cd(complexd(0.0, -1.0) * (test_hamiltonian(t) * c));
  };
  Eigen::Vector4cd c0;
  c0 << complexd(0.5, 0.1), complexd(-0.3, 0.4), complexd(0.2, -0.6),
      complexd(0.1, 0.3);
  c0.normalize();
  const auto c = integrate(rhs, c0, -30.0, 30.0, IntegratorSpec{});
  CHECK(std::abs(c.norm() - 1.0) < 1e-9);
}

TEST_CASE("halving rel_tol never increases the error vs a tight reference") {
  const auto rhs = [](double t, const Eigen::Vector2cd& c) {
    Eigen::Matrix2cd h;
    const double w = 1.0 + 0.4 * std::cos(0.7 * t);
    const double o = 0.3 / (1.0 + t * t);
    h << w, complexd(0.0, o), complexd(0.0, -o), -w;
    return Eigen::Vector2cd(complexd(0.0, -1.0) * (h * c));
  };
  const Eigen::Vector2cd c0(0.0, 1.0);

  IntegratorSpec ref_spec;
  ref_spec.rel_tol = 1e-13;
  ref_spec.abs_tol = 1e-15;
  const auto reference = integrate(rhs, c0, -15.0, 15.0, ref_spec);

  double prev = -1.0;
  for (double tol = 1e-5; tol >= 1e-9; tol /= 2.0) {
    IntegratorSpec spec;
    spec.rel_tol = tol;
    spec.abs_tol = tol * 1e-2;
    const auto y = integrate(rhs, c0, -15.0, 15.0, spec);
    const double err = (y - reference).norm();
    if (prev >= 0.0) CHECK(err <= prev + 1e-15);
    prev = err;
  }
}

TEST_CASE("backward then forward integration returns the start") {
  const auto rhs = [](double t, const Eigen::Vector2cd& c) {
    Eigen::Matrix2cd h;
    h << std::sin(t), 0.5, 0.5, -std::cos(t);
    return Eigen::Vector2cd(complexd(0.0, -1.0) * (h * c));
  };
  const Eigen::Vector2cd c0(complexd(0.6, 0.0), complexd(0.0, 0.8));
  IntegratorSpec spec;
  const auto fwd = integrate(rhs, c0, 0.0, 5.0, spec);
  const auto back = integrate(rhs, fwd, 5.0, 0.0, spec);
  const double budget = spec.abs_tol + spec.rel_tol * c0.norm();
  CHECK((back - c0).norm() <= 10.0 * budget);
}

TEST_CASE("deterministic repeat") {
  const auto rhs = [](double t, const Eigen::Vector2cd& c) {
    Eigen::Matrix2cd h;
    h << std::sin(1.3 * t), complexd(0.2, 0.1), complexd(0.2, -0.1), 0.0;
    return Eigen::Vector2cd(complexd(0.0, -1.0) * (h * c));
  };
  const Eigen::Vector2cd c0(1.0, 0.0);
  const auto a = integrate(rhs, c0, 0.0, 7.0, IntegratorSpec{});
  const auto b = integrate(rhs, c0, 0.0, 7.0, IntegratorSpec{});
  CHECK(a == b);
}

TEST_CASE("step underflow is reported") {
  // A rhs that turns non-finite past t = 1 forces endless step rejection.
  const auto rhs = [](double t, const Eigen::Vector2d& y) {
    if (t > 1.0) return Eigen::Vector2d(std::nan(""), std::nan(""));
    return Eigen::Vector2d(y(1), -y(0));
  };
  CHECK_THROWS_AS(
      integrate(rhs, Eigen::Vector2d(1.0, 0.0), 0.0, 2.0, IntegratorSpec{}),
      StepUnderflow);
}

TEST_CASE("non-finite state is reported") {
  const auto rhs = [](double, const Eigen::Vector2d&) {
    return Eigen::Vector2d(1e308, 0.0);
  };
  CHECK_THROWS_AS(
      integrate(rhs, Eigen::Vector2d(0.0, 0.0), 0.0, 10.0, IntegratorSpec{}),
      NonFiniteState);
}

TEST_CASE("spec validation") {
  IntegratorSpec spec;
  spec.rel_tol = 0.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = IntegratorSpec{};
  spec.min_step = 1.0;  // > max_step
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}
