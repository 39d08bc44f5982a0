#pragma once

#include <Eigen/Dense>

#include <stdexcept>

#include "pairprod/pulse.hpp"
#include "pairprod/solver.hpp"

namespace pairprod {

struct UnsupportedPolarization : std::runtime_error {
  UnsupportedPolarization()
      : std::runtime_error(
            "spinorial: method requires a linearly polarized pulse") {}
};

enum class Species { Electron, Positron };

/// Precession-type equations for (c_plus, c_minus): i d/dt c = H(t) c with
/// H = [[omega, i Omega], [-i Omega, -omega]],
/// omega = sqrt(p_perp^2 + (p_par - e A)^2 + 1), Omega = eps_perp e E / (2 omega^2).
/// A_t and E_t are the scalar potential/field components along the
/// polarization axis.
Eigen::Vector2cd spinorial_rhs(const Eigen::Vector2cd& c, double p_par,
                               double p_perp2, double A_t, double E_t);

/// Momentum distribution 2|c(t_f)|^2 of the created species at momentum p.
/// Electrons use the Feynman-type initial state (0, 1) and report 2|c_plus|^2;
/// positrons use (1, 0), run at the reflected momentum, and report
/// 2|c_minus|^2. Throws UnsupportedPolarization for non-linear pulses.
double spinorial_distribution(const Eigen::Vector3d& p, Species species,
                              const PulseConfig& pulse, const SolverSpec& spec);

}  // namespace pairprod
