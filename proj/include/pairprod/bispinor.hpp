#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

#include "pairprod/pulse.hpp"

namespace pairprod {

using complexd = std::complex<double>;
using Spinor2 = Eigen::Vector2cd;
using Bispinor = Eigen::Vector4cd;

/// Spin quantization: eigenstates of sigma.axis for a fixed axis, or of the
/// helicity operator sigma.n_q built from the momentum direction.
struct BispinorBasis {
  enum class Kind { FixedAxis, Helicity };
  Kind kind = Kind::FixedAxis;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();

  static BispinorBasis fixed_axis(const Eigen::Vector3d& a) {
    return {Kind::FixedAxis, a};
  }
  static BispinorBasis helicity() {
    return {Kind::Helicity, Eigen::Vector3d::UnitZ()};
  }

  void validate() const;
};

/// Two-spinor pair (lambda = +, lambda = -) for the given basis. Helicity
/// spinors use the half-angle convention with theta in [0, pi] and the
/// azimuth in (-pi, pi]; q = 0 falls back to the north pole.
std::array<Spinor2, 2> pauli_spinors(const BispinorBasis& basis,
                                     const Eigen::Vector3d& q);

/// The four free bispinors of one Dirac momentum mode: u^(+)_{q,lambda} with
/// energy +p0 and u^(-)_{-q,lambda} with energy -p0, orthonormal and complete.
struct ModeBispinors {
  Eigen::Vector3d q;              // electron canonical momentum
  double p0 = 1.0;                // sqrt(q^2 + 1)
  std::array<Bispinor, 2> u_plus;   // index 0: lambda = +, 1: lambda = -
  std::array<Bispinor, 2> u_minus;
};

ModeBispinors mode_bispinors(const BispinorBasis& basis, const Eigen::Vector3d& q);

// Dirac representation building blocks (mostly for tests and oracles).
Eigen::Matrix2cd sigma_dot(const Eigen::Vector3d& a);
Eigen::Matrix4cd gamma0();
Eigen::Matrix4cd alpha_dot(const Eigen::Vector3d& a);
Eigen::Matrix4cd free_hamiltonian(const Eigen::Vector3d& q);

/// Precomputed matrix elements G_k(i, j) = <u_i| alpha_k |u_j> for one mode,
/// with rows/columns ordered (beta, lambda) = (+,+), (+,-), (-,+), (-,-).
/// eval() assembles the interaction-picture coupling V(t); the coefficient
/// equations read dC/dt = -i V(t) C.
struct InteractionTable {
  std::array<Eigen::Matrix4cd, 3> G;
  double p0 = 1.0;

  Eigen::Matrix4cd eval(const Eigen::Vector3d& A, double t) const;
};

InteractionTable make_interaction_table(const ModeBispinors& mode);

/// V(t) with entries exp(i (beta - beta') p0 t) <u|(-e alpha.A)|u'>; Hermitian
/// at every t.
Eigen::Matrix4cd interaction_matrix(const ModeBispinors& mode,
                                    const Eigen::Vector3d& A, double t);

}  // namespace pairprod
