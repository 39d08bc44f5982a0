#include "pairprod/spinorial.hpp"

namespace pairprod {

Eigen::Vector2cd spinorial_rhs(const Eigen::Vector2cd& c, double p_par,
                               double p_perp2, double A_t, double E_t) {
  const double e = kElectronCharge;
  const double kin = p_par - e * A_t;
  const double omega2 = p_perp2 + kin * kin + 1.0;
  const double omega = std::sqrt(omega2);
  const double eps_perp = std::sqrt(p_perp2 + 1.0);
  const double big_omega = eps_perp * e * E_t / (2.0 * omega2);

  const std::complex<double> i{0.0, 1.0};
  Eigen::Vector2cd out;
  out(0) = -i * omega * c(0) + big_omega * c(1);
  out(1) = -big_omega * c(0) + i * omega * c(1);
  return out;
}

double spinorial_distribution(const Eigen::Vector3d& p, Species species,
                              const PulseConfig& pulse, const SolverSpec& spec) {
  if (!pulse.linear()) throw UnsupportedPolarization();

  const Eigen::Vector3d n = pulse.polarization_axis();
  const Eigen::Vector3d p_run =
      species == Species::Electron ? p : Eigen::Vector3d(-p);
  const double p_par = p_run.dot(n);
  const double p_perp2 = (p_run - p_par * n).squaredNorm();

  const auto rhs = [&](double t, const Eigen::Vector2cd& c) {
    return spinorial_rhs(c, p_par, p_perp2, eval_potential(pulse, t).dot(n),
                         eval_field(pulse, t).dot(n));
  };

  const TimeWindow window = spec.effective_window(pulse);
  Eigen::Vector2cd c = species == Species::Electron
                           ? Eigen::Vector2cd(0.0, 1.0)
                           : Eigen::Vector2cd(1.0, 0.0);
  c = integrate(rhs, c, window.t_i, window.t_f, spec.integ);
  const int component = species == Species::Electron ? 0 : 1;
  return 2.0 * std::norm(c(component));
}

}  // namespace pairprod
