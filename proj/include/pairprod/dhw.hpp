#pragma once

#include <Eigen/Dense>

#include "pairprod/pulse.hpp"
#include "pairprod/solver.hpp"

namespace pairprod {

/// Reduced kinetic state along one momentum characteristic:
/// (f_W, v1, v2, v3), ten reals, all zero in the remote past.
using DHWState = Eigen::Matrix<double, 10, 1>;

/// Raw ten-component Wigner vector (f3, g0, g1, g2); test-only oracle for
/// the reduced formulation, not wired to the CLI.
using RawDHWState = Eigen::Matrix<double, 10, 1>;

/// Kinetic equations along the characteristic p(t) = p - e A(t). The variant
/// selects the sign of the source term: (f_W - 1) for Feynman-type vacuum
/// conditions, (f_W + 1) for anti-Feynman-type.
DHWState dhw_rhs(const DHWState& state, const Eigen::Vector3d& p_t, double p0_t,
                 const Eigen::Vector3d& E_t, Variant variant);

/// Integrates from vacuum over the window and returns f_W(t_f). The argument
/// is the electron momentum for Feynman runs; for anti-Feynman runs it is the
/// positron momentum and the characteristic runs at the reflected momentum.
double dhw_distribution(const Eigen::Vector3d& p, Variant variant,
                        const PulseConfig& pulse, const SolverSpec& spec);

RawDHWState dhw_raw_rhs(const RawDHWState& w, const Eigen::Vector3d& p_t);

/// Assembles the raw vector from the reduced state, W = 2(f_W -+ 1) e1 + T w9.
RawDHWState reconstruct(double f_w, const Eigen::Matrix<double, 9, 1>& w9,
                        const Eigen::Vector3d& p_t, Variant variant);

/// Vacuum value of the raw vector for the given variant.
RawDHWState raw_vacuum(const Eigen::Vector3d& p_t, Variant variant);

}  // namespace pairprod
