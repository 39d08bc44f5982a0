#include "pairprod/dhw.hpp"

namespace pairprod {

DHWState dhw_rhs(const DHWState& state, const Eigen::Vector3d& p_t, double p0_t,
                 const Eigen::Vector3d& E_t, Variant variant) {
  const double f = state(0);
  const Eigen::Vector3d v1 = state.segment<3>(1);
  const Eigen::Vector3d v2 = state.segment<3>(4);
  const Eigen::Vector3d v3 = state.segment<3>(7);
  const double e = kElectronCharge;
  const double p0sq = p0_t * p0_t;
  const double source = variant == Variant::Feynman ? f - 1.0 : f + 1.0;

  DHWState out;
  out(0) = e * E_t.dot(v1) / (2.0 * p0_t);
  out.segment<3>(1) =
      (2.0 * e / (p0sq * p0_t)) * (p_t * p_t.dot(E_t) - p0sq * E_t) * source -
      (e / p0sq) * p_t * E_t.dot(v1) + 2.0 * p_t.cross(v2) - 2.0 * v3;
  out.segment<3>(4) = 2.0 * p_t.cross(v1);
  out.segment<3>(7) = 2.0 * (p_t * p_t.dot(v1) + v1);
  return out;
}

double dhw_distribution(const Eigen::Vector3d& p, Variant variant,
                        const PulseConfig& pulse, const SolverSpec& spec) {
  const Eigen::Vector3d p_run =
      variant == Variant::Feynman ? p : Eigen::Vector3d(-p);
  const TimeWindow window = spec.effective_window(pulse);

  const auto rhs = [&](double t, const DHWState& s) {
    const Eigen::Vector3d p_t = p_run - kElectronCharge * eval_potential(pulse, t);
    return dhw_rhs(s, p_t, std::sqrt(p_t.squaredNorm() + 1.0),
                   eval_field(pulse, t), variant);
  };

  const DHWState final_state =
      integrate(rhs, DHWState(DHWState::Zero()), window.t_i, window.t_f, spec.integ);
  return final_state(0);
}

RawDHWState dhw_raw_rhs(const RawDHWState& w, const Eigen::Vector3d& p_t) {
  const double f3 = w(0);
  const Eigen::Vector3d g0 = w.segment<3>(1);
  const Eigen::Vector3d g1 = w.segment<3>(4);
  const Eigen::Vector3d g2 = w.segment<3>(7);

  RawDHWState out;
  out(0) = 2.0 * p_t.dot(g2);
  out.segment<3>(1) = 2.0 * p_t.cross(g1);
  out.segment<3>(4) = 2.0 * p_t.cross(g0) - 2.0 * g2;
  out.segment<3>(7) = -2.0 * p_t * f3 + 2.0 * g1;
  return out;
}

RawDHWState reconstruct(double f_w, const Eigen::Matrix<double, 9, 1>& w9,
                        const Eigen::Vector3d& p_t, Variant variant) {
  const double p0 = std::sqrt(p_t.squaredNorm() + 1.0);
  const double scalar =
      2.0 * (variant == Variant::Feynman ? f_w - 1.0 : f_w + 1.0) / p0;
  const Eigen::Vector3d v1 = w9.segment<3>(0);

  RawDHWState w;
  w(0) = scalar - p_t.dot(v1);        // f3 row of T is -p^T on v1
  w.segment<3>(1) = w9.segment<3>(3); // g0 = v2
  w.segment<3>(4) = scalar * p_t + v1;
  w.segment<3>(7) = w9.segment<3>(6); // g2 = v3
  return w;
}

RawDHWState raw_vacuum(const Eigen::Vector3d& p_t, Variant variant) {
  return reconstruct(0.0, Eigen::Matrix<double, 9, 1>::Zero(), p_t, variant);
}

}  // namespace pairprod
