#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace pairprod {

struct IntegratorSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.05;
  double min_step = 1e-12;

  void validate() const {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("solver.rel_tol: must be > 0");
    if (!(abs_tol > 0.0)) throw std::invalid_argument("solver.abs_tol: must be > 0");
    if (!(min_step > 0.0 && min_step <= max_step)) {
      throw std::invalid_argument("solver.min_step: need 0 < min_step <= max_step");
    }
  }
};

struct StepUnderflow : std::runtime_error {
  explicit StepUnderflow(double t)
      : std::runtime_error("odeint: step size underflow at t = " + std::to_string(t)) {}
};

struct NonFiniteState : std::runtime_error {
  explicit NonFiniteState(double t)
      : std::runtime_error("odeint: non-finite state at t = " + std::to_string(t)) {}
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <typename State>
double error_norm(const State& err, const State& y0, const State& y1,
                  double abs_tol, double rel_tol) {
  double acc = 0.0;
  const auto n = y0.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double scale =
        abs_tol + rel_tol * std::max(magnitude(y0[i]), magnitude(y1[i]));
    const double e = magnitude(err[i]) / scale;
    acc += e * e;
  }
  return std::sqrt(acc / static_cast<double>(n));
}

template <typename State>
bool all_finite(const State& y) {
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (!std::isfinite(magnitude(y[i]))) return false;
  }
  return true;
}

}  // namespace detail

/// Integrates dy/dt = rhs(t, y) from t_i to t_f (either direction) with the
/// Dormand-Prince 5(4) embedded pair and a standard step controller.
/// Deterministic for identical inputs. Throws StepUnderflow / NonFiniteState.
template <typename State, typename Rhs>
State integrate(Rhs&& rhs, State y, double t_i, double t_f, const IntegratorSpec& spec) {
  spec.validate();
  if (t_i == t_f) return y;

  // Dormand-Prince coefficients.
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                   b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // b - b_hat, error estimator weights (k7 = rhs at the accepted point).
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double direction = t_f > t_i ? 1.0 : -1.0;
  const double span = std::abs(t_f - t_i);
  double t = t_i;
  double h = direction * std::min(spec.max_step, span);

  State k1 = rhs(t, y);
  bool have_k1 = true;

  while (direction * (t_f - t) > 0.0) {
    if (std::abs(h) > std::abs(t_f - t)) h = t_f - t;
    if (!have_k1) {
      k1 = rhs(t, y);
      have_k1 = true;
    }

    const State k2 = rhs(t + c2 * h, State(y + h * (a21 * k1)));
    const State k3 = rhs(t + c3 * h, State(y + h * (a31 * k1 + a32 * k2)));
    const State k4 = rhs(t + c4 * h, State(y + h * (a41 * k1 + a42 * k2 + a43 * k3)));
    const State k5 =
        rhs(t + c5 * h, State(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
    const State k6 = rhs(
        t + h, State(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)));
    const State y_new =
        y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const State k7 = rhs(t + h, y_new);
    const State err_vec =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err = detail::error_norm(err_vec, y, y_new, spec.abs_tol, spec.rel_tol);
    if (!std::isfinite(err)) err = 1e10;

    if (err <= 1.0) {
      t += h;
      y = y_new;
      k1 = k7;  // FSAL
      if (!detail::all_finite(y)) throw NonFiniteState(t);
      double factor = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
      factor = std::clamp(factor, 0.2, 5.0);
      h = direction * std::min(std::abs(h) * factor, spec.max_step);
    } else {
      const double factor = std::max(0.2, 0.9 * std::pow(err, -0.2));
      h *= factor;
      if (std::abs(h) < spec.min_step) throw StepUnderflow(t);
    }
  }
  return y;
}

}  // namespace pairprod
