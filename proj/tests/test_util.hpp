#pragma once

#include <random>

#include "pairprod/pulse.hpp"
#include "pairprod/solver.hpp"

// Pulse parameter sets used repeatedly across the suites (all in
// relativistic units; field strengths in Schwinger units).
namespace testutil {

inline pairprod::PulseConfig sauter_pulse(double e0, double tau0, double sigma) {
  pairprod::PulseConfig p;
  p.kind = pairprod::PulseKind::SauterLike;
  p.E0 = e0;
  p.tau0 = tau0;
  p.t0 = tau0;
  p.sigma = sigma;
  return p;
}

// Asymmetric Sauter-like pulse, E0 = 0.5, tau0 = t0 = 3, sigma = 0.8.
inline pairprod::PulseConfig strong_asym_pulse() { return sauter_pulse(0.5, 3.0, 0.8); }

// Symmetric pulse with two field extrema, E0 = 1.5, tau0 = t0 = 3.
inline pairprod::PulseConfig strong_sym_pulse() { return sauter_pulse(1.5, 3.0, 0.0); }

inline pairprod::PulseConfig oscillating_pulse(double omega) {
  pairprod::PulseConfig p = sauter_pulse(0.5, 3.0, 0.8);
  p.kind = pairprod::PulseKind::Oscillating;
  p.omega = omega;
  return p;
}

inline pairprod::PulseConfig circular_pulse(double omega) {
  pairprod::PulseConfig p = sauter_pulse(0.5, 3.0, 0.8);
  p.kind = pairprod::PulseKind::Elliptic;
  p.omega = omega;
  p.delta = M_PI / 4.0;
  return p;
}

inline pairprod::SolverSpec default_spec() { return {}; }

inline pairprod::SolverSpec loose_spec() {
  pairprod::SolverSpec s;
  s.integ.rel_tol = 1e-8;
  s.integ.abs_tol = 1e-10;
  return s;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace testutil
