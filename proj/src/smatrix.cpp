#include "pairprod/smatrix.hpp"

namespace pairprod {

namespace {

constexpr complexd kI{0.0, 1.0};

// Fills one conditioning row from the blocks of the two shooting runs.
void fill_row(PairAmplitudes& out, const ShootingBlocks& blocks, int cond,
              double sign) {
  const complexd det = blocks.M.determinant();
  if (std::abs(det) < 1e-12) throw SingularShooting();
  const Eigen::Vector2cd rhs = Eigen::Vector2cd::Unit(cond);
  const Eigen::Vector2cd alpha = blocks.M.inverse() * rhs;
  const double n_tilde = alpha.norm();
  const Eigen::Vector2cd c_out = blocks.P * alpha;
  out.n_tilde[cond] = n_tilde;
  for (int l = 0; l < 2; ++l) {
    out.amplitude(cond, l) = sign * c_out(l) / n_tilde;
    out.f(cond, l) = std::norm(out.amplitude(cond, l));
  }
}

PairAmplitudes solve_rows(const Eigen::Vector3d& momentum, Variant variant,
                          const PulseConfig& pulse, const BispinorBasis& basis,
                          const SolverSpec& spec, int cond_first, int cond_last) {
  PairAmplitudes out;
  out.momentum = momentum;
  out.variant = variant;
  out.basis = basis;

  // Mode equations run at the electron canonical momentum.
  const Eigen::Vector3d q =
      variant == Variant::Feynman ? momentum : Eigen::Vector3d(-momentum);
  const ModeBispinors mode = mode_bispinors(basis, q);
  const InteractionTable table = make_interaction_table(mode);

  const TimeWindow window = spec.effective_window(pulse);
  IntegratorSpec integ = spec.integ;
  integ.max_step = phase_resolving_max_step(mode.p0, integ.max_step);

  const ShootingBlocks blocks = shoot(table, pulse, variant, window, integ);
  const double sign = variant == Variant::Feynman ? 1.0 : -1.0;
  for (int cond = cond_first; cond <= cond_last; ++cond) {
    fill_row(out, blocks, cond, sign);
  }
  return out;
}

}  // namespace

Eigen::Vector4cd coefficient_rhs(const InteractionTable& table,
                                 const PulseConfig& pulse, double t,
                                 const Eigen::Vector4cd& c) {
  return -kI * (table.eval(eval_potential(pulse, t), t) * c);
}

ShootingBlocks shoot(const InteractionTable& table, const PulseConfig& pulse,
                     Variant variant, const TimeWindow& window,
                     const IntegratorSpec& integ) {
  // Feynman conditions prescribe the negative-frequency content, so the two
  // basis trajectories start in the beta = - components (indices 2, 3);
  // anti-Feynman starts in beta = + (indices 0, 1).
  const int boundary_offset = variant == Variant::Feynman ? 2 : 0;
  const int outgoing_offset = 2 - boundary_offset;

  const auto rhs = [&](double t, const Eigen::Vector4cd& c) {
    return coefficient_rhs(table, pulse, t, c);
  };

  ShootingBlocks blocks;
  for (int mu = 0; mu < 2; ++mu) {
    Eigen::Vector4cd c = Eigen::Vector4cd::Zero();
    c(boundary_offset + mu) = 1.0;
    c = integrate(rhs, c, window.t_i, window.t_f, integ);
    for (int l = 0; l < 2; ++l) {
      blocks.M(l, mu) = c(boundary_offset + l);
      blocks.P(l, mu) = c(outgoing_offset + l);
    }
  }
  return blocks;
}

PairAmplitudes solve_boundary_value(const Eigen::Vector3d& momentum, int cond,
                                    Variant variant, const PulseConfig& pulse,
                                    const BispinorBasis& basis,
                                    const SolverSpec& spec) {
  return solve_rows(momentum, variant, pulse, basis, spec, cond, cond);
}

PairAmplitudes pair_distributions(const Eigen::Vector3d& momentum, Variant variant,
                                  const PulseConfig& pulse,
                                  const BispinorBasis& basis,
                                  const SolverSpec& spec) {
  return solve_rows(momentum, variant, pulse, basis, spec, 0, 1);
}

}  // namespace pairprod
