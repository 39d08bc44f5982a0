#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "pairprod/pulse.hpp"
#include "pairprod/smatrix.hpp"
#include "pairprod/solver.hpp"

namespace pairprod {

enum class Method { SMatrix, DHW, Spinorial };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// Rectangular (p_x, p_y) grid at fixed p_z, all in m_e c.
struct MomentumGrid {
  double px_min = -2.0, px_max = 2.0;
  int nx = 32;
  double py_min = -2.0, py_max = 2.0;
  int ny = 32;
  double pz = 0.0;

  void validate() const;
  double px(int i) const { return px_min + (px_max - px_min) * i / (nx - 1); }
  double py(int j) const { return py_min + (py_max - py_min) * j / (ny - 1); }
  Eigen::Vector3d point(int i, int j) const { return {px(i), py(j), pz}; }
  int index(int i, int j) const { return j * nx + i; }
  int size() const { return nx * ny; }
};

struct GridPoint {
  double f_total = 0.0;
  bool has_amplitudes = false;  // smatrix payload below
  Eigen::Matrix2cd amplitude = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2d f = Eigen::Matrix2d::Zero();
  std::array<double, 2> n_tilde = {1.0, 1.0};
};

struct GridResult {
  MomentumGrid grid;
  Method method = Method::SMatrix;
  Variant variant = Variant::Feynman;
  std::vector<GridPoint> points;  // row-major, index = j * nx + i
  double wall_seconds = 0.0;      // in-memory metadata only, never emitted
};

/// Evaluates the backend at every grid point. Deterministic: the payload is
/// bit-identical for any parallelism degree. Backend errors are rethrown with
/// the grid coordinates attached and no partial result is returned.
GridResult scan_grid(const MomentumGrid& grid, Method method, Variant variant,
                     const PulseConfig& pulse, const BispinorBasis& basis,
                     const SolverSpec& spec, int parallelism);

struct DiffReport {
  double max_abs = 0.0;
  int i_abs = 0, j_abs = 0;
  double max_rel = 0.0;
  int i_rel = 0, j_rel = 0;
  double scale = 0.0;  // denominator used for max_rel
};

/// Pointwise f_total differences of two completed scans. The relative
/// difference is measured against the larger of the two map maxima with a
/// floor of 1e-12 on the denominator.
DiffReport compare_grids(const GridResult& a, const GridResult& b);

DiffReport compare_methods(const MomentumGrid& grid, Method method_a,
                           Method method_b, Variant variant,
                           const PulseConfig& pulse, const BispinorBasis& basis,
                           const SolverSpec& spec, int parallelism);

}  // namespace pairprod
