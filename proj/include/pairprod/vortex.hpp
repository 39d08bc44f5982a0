#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "pairprod/scan.hpp"

namespace pairprod {

/// Complex amplitude samples on a momentum grid together with the phase of
/// the reference-corrected amplitude exp(i phi(p)) A(p), wrapped to (-pi, pi].
struct PhaseMap {
  MomentumGrid grid;
  std::vector<std::complex<double>> amplitude;  // raw amplitude, index j*nx+i
  std::vector<double> phase;
  double eta = 1.8;
  double t_i = 0.0;
  double t_f = 0.0;
};

/// Regular reference phase eta * sqrt(p^2 + 1) * (t_f - t_i); removing it
/// smooths the phase image without moving singularities.
double reference_phase(const Eigen::Vector3d& p, double eta, double t_i, double t_f);

PhaseMap make_phase_map(const MomentumGrid& grid,
                        std::vector<std::complex<double>> amplitude, double eta,
                        const TimeWindow& window);

/// Extracts the (cond, out) amplitude channel of an smatrix scan.
PhaseMap phase_map_from_scan(const GridResult& scan, int cond, int out,
                             double eta, const TimeWindow& window);

struct UnresolvedWinding : std::runtime_error {
  UnresolvedWinding(int i, int j)
      : std::runtime_error("vortex: unresolved winding at plaquette (" +
                           std::to_string(i) + ", " + std::to_string(j) + ")") {}
};

/// Integer circulation of the wrapped phase around every elementary
/// plaquette; (nx-1) x (ny-1) values, index j * (nx-1) + i.
struct WindingGrid {
  int nx = 0, ny = 0;  // plaquette counts
  std::vector<int> winding;
  std::vector<double> residual;

  int at(int i, int j) const { return winding[static_cast<size_t>(j) * nx + i]; }
};

WindingGrid winding_numbers(const PhaseMap& map);

enum class SingularityClass { Vortex, NodalLineSegment, Unresolved };

std::string singularity_class_name(SingularityClass c);

struct SingularityRecord {
  int i = 0, j = 0;    // plaquette cell indices
  double px = 0.0, py = 0.0;  // plaquette center
  int winding = 0;
  SingularityClass cls = SingularityClass::Vortex;
  double min_amplitude = 0.0;  // smallest corner |amplitude|
};

struct ClassifyOptions {
  // Nodal chains: >= 3 collinear low-amplitude cells with a ~pi phase jump.
  double nodal_amplitude_fraction = 1e-3;
  int nodal_min_chain = 3;
  // Helicity maps carry a convention-dependent singular point at p = 0;
  // plaquettes adjacent to the origin are tagged unresolved when set.
  bool exclude_origin = false;
};

std::vector<SingularityRecord> classify_singularities(
    const PhaseMap& map, const WindingGrid& windings,
    const ClassifyOptions& options = {});

}  // namespace pairprod
