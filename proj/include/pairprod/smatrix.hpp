#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>

#include "pairprod/bispinor.hpp"
#include "pairprod/pulse.hpp"
#include "pairprod/solver.hpp"

namespace pairprod {

/// Renormalized conditional pair-creation amplitudes at one momentum.
/// For Feynman runs `momentum` is the created electron momentum and the
/// conditioning label is the positron spin; for AntiFeynman runs it is the
/// positron momentum (the mode equations are solved at -momentum) and the
/// conditioning label is the electron spin. Row index of `amplitude`/`f` is
/// the conditioning spin (0: +, 1: -), column index the outgoing spin.
struct PairAmplitudes {
  Eigen::Vector3d momentum;
  Variant variant = Variant::Feynman;
  BispinorBasis basis;
  Eigen::Matrix2cd amplitude = Eigen::Matrix2cd::Zero();
  std::array<double, 2> n_tilde = {1.0, 1.0};
  Eigen::Matrix2d f = Eigen::Matrix2d::Zero();

  double f_total() const { return f.sum(); }
};

struct SingularShooting : std::runtime_error {
  SingularShooting() : std::runtime_error("smatrix: singular shooting matrix") {}
};

/// Right-hand side dC/dt = -i V(t) C of the coefficient equations; the free
/// phases are absorbed in the interaction picture, so A = 0 gives zero.
Eigen::Vector4cd coefficient_rhs(const InteractionTable& table,
                                 const PulseConfig& pulse, double t,
                                 const Eigen::Vector4cd& c);

/// Final-time transfer blocks of the two shooting trajectories:
/// column mu of M holds the boundary-side coefficients, column mu of P the
/// opposite-frequency coefficients produced from unit initial state e_mu.
struct ShootingBlocks {
  Eigen::Matrix2cd M;
  Eigen::Matrix2cd P;
};

ShootingBlocks shoot(const InteractionTable& table, const PulseConfig& pulse,
                     Variant variant, const TimeWindow& window,
                     const IntegratorSpec& integ);

/// One conditioning row: amplitudes and normalization for the given
/// conditioning spin (0: +, 1: -). `momentum` follows the convention above.
PairAmplitudes solve_boundary_value(const Eigen::Vector3d& momentum, int cond,
                                    Variant variant, const PulseConfig& pulse,
                                    const BispinorBasis& basis,
                                    const SolverSpec& spec);

/// Full 2x2 amplitude set plus normalizations for both conditioning spins.
PairAmplitudes pair_distributions(const Eigen::Vector3d& momentum, Variant variant,
                                  const PulseConfig& pulse,
                                  const BispinorBasis& basis,
                                  const SolverSpec& spec);

}  // namespace pairprod
