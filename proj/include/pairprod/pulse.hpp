#pragma once

#include <Eigen/Dense>

namespace pairprod {

// Relativistic units throughout: hbar = c = m_e = |e| = 1, electron charge e = -1.
// Times in Compton times, momenta in m_e c, fields in Schwinger units (E_S = 1).
inline constexpr double kElectronCharge = -1.0;

enum class PulseKind { SauterLike, Oscillating, Elliptic };

/// Analytic description of one time-dependent homogeneous electric-field pulse.
/// The vector potential is built from the envelope
///   F(t) = tau0 / cosh(t / tau(t)),   tau(t) = tau0 * (1 + sigma * tanh(t / t0)),
/// so that A(+-inf) = 0 and the field E = -dA/dt carries zero net impulse.
struct PulseConfig {
  PulseKind kind = PulseKind::SauterLike;
  double E0 = 0.0;      // field strength, Schwinger units
  double tau0 = 3.0;    // envelope duration
  double t0 = 3.0;      // asymmetry transition time
  double sigma = 0.0;   // asymmetry, -1 < sigma < 1
  double omega = 0.0;   // carrier frequency (unused for SauterLike)
  double chi = 0.0;     // carrier-envelope phase
  double delta = 0.0;   // ellipticity angle, 0 linear .. pi/4 circular
  Eigen::Vector3d eps1 = Eigen::Vector3d::UnitX();
  Eigen::Vector3d eps2 = Eigen::Vector3d::UnitY();

  /// Throws std::invalid_argument naming the offending parameter.
  void validate() const;

  /// True when the pulse is linearly polarized (SauterLike, Oscillating,
  /// or Elliptic with delta == 0).
  bool linear() const;

  /// Polarization axis of a linear pulse.
  Eigen::Vector3d polarization_axis() const;
};

struct TimeWindow {
  double t_i = 0.0;
  double t_f = 0.0;
};

/// Envelope F(t); total function of real t.
double envelope(const PulseConfig& pulse, double t);

/// Closed-form dF/dt, including the chain-rule term through tau(t).
double envelope_deriv(const PulseConfig& pulse, double t);

/// Vector potential A(t); vanishes at both temporal infinities.
Eigen::Vector3d eval_potential(const PulseConfig& pulse, double t);

/// Electric field E(t) = -dA/dt, evaluated analytically.
Eigen::Vector3d eval_field(const PulseConfig& pulse, double t);

/// Adaptive quadrature of E over [t_i, t_f]; equals A(t_i) - A(t_f).
Eigen::Vector3d net_impulse(const PulseConfig& pulse, double t_i, double t_f);

/// Smallest envelope-shaped window (widened by a fixed safety margin) outside
/// which |A| and |E| stay below eps_A times their maxima. Throws
/// std::invalid_argument for eps_A outside (0, 1).
TimeWindow integration_window(const PulseConfig& pulse, double eps_A = 1e-9);

}  // namespace pairprod
