#include "pairprod/bispinor.hpp"

#include <cmath>
#include <stdexcept>

namespace pairprod {

namespace {

constexpr complexd kI{0.0, 1.0};

// Half-angle spinors of the direction (theta, phi); chi_+ has eigenvalue +1
// of sigma.n and chi_- eigenvalue -1.
std::array<Spinor2, 2> half_angle_spinors(double theta, double phi) {
  const complexd em = std::exp(-kI * (phi / 2.0));
  const complexd ep = std::exp(kI * (phi / 2.0));
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Spinor2 chi_plus, chi_minus;
  chi_plus << em * c, ep * s;
  chi_minus << -em * s, ep * c;
  return {chi_plus, chi_minus};
}

// theta in [0, pi], phi in (-pi, pi]; the zero vector maps to the north pole.
std::pair<double, double> polar_angles(const Eigen::Vector3d& v) {
  const double rho = std::hypot(v.x(), v.y());
  if (rho == 0.0 && v.z() == 0.0) return {0.0, 0.0};
  const double theta = std::atan2(rho, v.z());
  double phi = rho == 0.0 ? 0.0 : std::atan2(v.y(), v.x());
  if (phi == -M_PI) phi = M_PI;
  return {theta, phi};
}

}  // namespace

void BispinorBasis::validate() const {
  if (kind == Kind::FixedAxis && std::abs(axis.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("basis.axis: must be a unit vector");
  }
}

std::array<Spinor2, 2> pauli_spinors(const BispinorBasis& basis,
                                     const Eigen::Vector3d& q) {
  basis.validate();
  const Eigen::Vector3d dir =
      basis.kind == BispinorBasis::Kind::FixedAxis ? basis.axis : q;
  const auto [theta, phi] = polar_angles(dir);
  return half_angle_spinors(theta, phi);
}

ModeBispinors mode_bispinors(const BispinorBasis& basis, const Eigen::Vector3d& q) {
  ModeBispinors mode;
  mode.q = q;
  mode.p0 = std::sqrt(q.squaredNorm() + 1.0);
  const double norm = std::sqrt((mode.p0 + 1.0) / (2.0 * mode.p0));
  const Eigen::Matrix2cd small = sigma_dot(q) / (mode.p0 + 1.0);
  const auto chi = pauli_spinors(basis, q);
  for (int l = 0; l < 2; ++l) {
    const Spinor2 lower = small * chi[l];
    mode.u_plus[l] << norm * chi[l], norm * lower;
    // u^(-) evaluated at momentum -q: the upper block carries a minus sign.
    mode.u_minus[l] << -norm * lower, norm * chi[l];
  }
  return mode;
}

Eigen::Matrix2cd sigma_dot(const Eigen::Vector3d& a) {
  Eigen::Matrix2cd m;
  m << complexd(a.z(), 0.0), complexd(a.x(), -a.y()),
       complexd(a.x(), a.y()), complexd(-a.z(), 0.0);
  return m;
}

Eigen::Matrix4cd gamma0() {
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
  g(0, 0) = g(1, 1) = 1.0;
  g(2, 2) = g(3, 3) = -1.0;
  return g;
}

Eigen::Matrix4cd alpha_dot(const Eigen::Vector3d& a) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m.block<2, 2>(0, 2) = sigma_dot(a);
  m.block<2, 2>(2, 0) = sigma_dot(a);
  return m;
}

Eigen::Matrix4cd free_hamiltonian(const Eigen::Vector3d& q) {
  return alpha_dot(q) + gamma0();
}

InteractionTable make_interaction_table(const ModeBispinors& mode) {
  InteractionTable table;
  table.p0 = mode.p0;
  const std::array<const Bispinor*, 4> u = {&mode.u_plus[0], &mode.u_plus[1],
                                            &mode.u_minus[0], &mode.u_minus[1]};
  for (int k = 0; k < 3; ++k) {
    const Eigen::Matrix4cd ak = alpha_dot(Eigen::Vector3d::Unit(k));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        table.G[k](i, j) = -kElectronCharge * u[i]->dot(ak * (*u[j]));
      }
    }
  }
  return table;
}

Eigen::Matrix4cd InteractionTable::eval(const Eigen::Vector3d& A, double t) const {
  Eigen::Matrix4cd v = A.x() * G[0] + A.y() * G[1] + A.z() * G[2];
  const complexd w = std::exp(complexd(0.0, 2.0 * p0 * t));
  v.block<2, 2>(0, 2) *= w;
  v.block<2, 2>(2, 0) *= std::conj(w);
  return v;
}

Eigen::Matrix4cd interaction_matrix(const ModeBispinors& mode,
                                    const Eigen::Vector3d& A, double t) {
  return make_interaction_table(mode).eval(A, t);
}

}  // namespace pairprod
