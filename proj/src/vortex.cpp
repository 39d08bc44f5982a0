#include "pairprod/vortex.hpp"

#include <algorithm>
#include <cmath>

namespace pairprod {

namespace {

// Wraps into (-pi, pi].
double wrap_angle(double x) {
  double r = std::remainder(x, 2.0 * M_PI);
  if (r <= -M_PI) r = M_PI;
  return r;
}

}  // namespace

double reference_phase(const Eigen::Vector3d& p, double eta, double t_i,
                       double t_f) {
  return eta * std::sqrt(p.squaredNorm() + 1.0) * (t_f - t_i);
}

PhaseMap make_phase_map(const MomentumGrid& grid,
                        std::vector<std::complex<double>> amplitude, double eta,
                        const TimeWindow& window) {
  grid.validate();
  if (amplitude.size() != static_cast<size_t>(grid.size())) {
    throw std::invalid_argument("vortex: amplitude size does not match grid");
  }
  PhaseMap map;
  map.grid = grid;
  map.amplitude = std::move(amplitude);
  map.eta = eta;
  map.t_i = window.t_i;
  map.t_f = window.t_f;
  map.phase.resize(map.amplitude.size());
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const int k = grid.index(i, j);
      const double phi = reference_phase(grid.point(i, j), eta, window.t_i, window.t_f);
      map.phase[k] =
          std::arg(std::exp(std::complex<double>(0.0, phi)) * map.amplitude[k]);
    }
  }
  return map;
}

PhaseMap phase_map_from_scan(const GridResult& scan, int cond, int out,
                             double eta, const TimeWindow& window) {
  std::vector<std::complex<double>> amplitude(scan.points.size());
  for (size_t k = 0; k < scan.points.size(); ++k) {
    if (!scan.points[k].has_amplitudes) {
      throw std::invalid_argument("vortex: scan carries no amplitudes");
    }
    amplitude[k] = scan.points[k].amplitude(cond, out);
  }
  return make_phase_map(scan.grid, std::move(amplitude), eta, window);
}

WindingGrid winding_numbers(const PhaseMap& map) {
  const MomentumGrid& g = map.grid;
  WindingGrid w;
  w.nx = g.nx - 1;
  w.ny = g.ny - 1;
  w.winding.resize(static_cast<size_t>(w.nx) * w.ny);
  w.residual.resize(w.winding.size());
  for (int j = 0; j < w.ny; ++j) {
    for (int i = 0; i < w.nx; ++i) {
      const double t00 = map.phase[g.index(i, j)];
      const double t10 = map.phase[g.index(i + 1, j)];
      const double t11 = map.phase[g.index(i + 1, j + 1)];
      const double t01 = map.phase[g.index(i, j + 1)];
      const double circulation = wrap_angle(t10 - t00) + wrap_angle(t11 - t10) +
                                 wrap_angle(t01 - t11) + wrap_angle(t00 - t01);
      const double turns = circulation / (2.0 * M_PI);
      const int snapped = static_cast<int>(std::lround(turns));
      const double residual = std::abs(turns - snapped);
      if (!(residual <= 0.25)) throw UnresolvedWinding(i, j);
      const size_t k = static_cast<size_t>(j) * w.nx + i;
      w.winding[k] = snapped;
      w.residual[k] = residual;
    }
  }
  return w;
}

std::string singularity_class_name(SingularityClass c) {
  switch (c) {
    case SingularityClass::Vortex: return "vortex";
    case SingularityClass::NodalLineSegment: return "nodal-line-segment";
    case SingularityClass::Unresolved: return "unresolved";
  }
  return "?";
}

std::vector<SingularityRecord> classify_singularities(
    const PhaseMap& map, const WindingGrid& windings,
    const ClassifyOptions& options) {
  const MomentumGrid& g = map.grid;
  const int nx = windings.nx, ny = windings.ny;

  double max_amp = 0.0;
  for (const auto& a : map.amplitude) max_amp = std::max(max_amp, std::abs(a));
  const double low_threshold = options.nodal_amplitude_fraction * max_amp;

  const auto corner_min = [&](int i, int j) {
    return std::min({std::abs(map.amplitude[g.index(i, j)]),
                     std::abs(map.amplitude[g.index(i + 1, j)]),
                     std::abs(map.amplitude[g.index(i + 1, j + 1)]),
                     std::abs(map.amplitude[g.index(i, j + 1)])});
  };
  const auto center_x = [&](int i) { return 0.5 * (g.px(i) + g.px(i + 1)); };
  const auto center_y = [&](int j) { return 0.5 * (g.py(j) + g.py(j + 1)); };

  const double cell_dx = (g.px_max - g.px_min) / (g.nx - 1);
  const double cell_dy = (g.py_max - g.py_min) / (g.ny - 1);
  const auto near_origin = [&](int i, int j) {
    return std::abs(center_x(i)) <= 1.5 * cell_dx &&
           std::abs(center_y(j)) <= 1.5 * cell_dy;
  };

  std::vector<SingularityRecord> records;

  // Phase-singular plaquettes.
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int wind = windings.at(i, j);
      if (wind == 0) continue;
      SingularityRecord rec;
      rec.i = i;
      rec.j = j;
      rec.px = center_x(i);
      rec.py = center_y(j);
      rec.winding = wind;
      rec.min_amplitude = corner_min(i, j);
      rec.cls = options.exclude_origin && near_origin(i, j)
                    ? SingularityClass::Unresolved
                    : SingularityClass::Vortex;
      records.push_back(rec);
    }
  }

  // Nodal-line chains among the zero-winding cells.
  std::vector<char> low(static_cast<size_t>(nx) * ny, 0);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      low[static_cast<size_t>(j) * nx + i] =
          windings.at(i, j) == 0 && corner_min(i, j) < low_threshold;
    }
  }

  std::vector<char> nodal(low.size(), 0);
  const auto pi_jump = [&](double a, double b) {
    return std::abs(wrap_angle(b - a)) > 0.5 * M_PI;
  };

  // Vertical chains: the zero line crosses the cell between its left and
  // right corners, so the jump is measured along the bottom edge.
  for (int i = 0; i < nx; ++i) {
    int j = 0;
    while (j < ny) {
      if (!low[static_cast<size_t>(j) * nx + i]) { ++j; continue; }
      int j_end = j;
      while (j_end < ny && low[static_cast<size_t>(j_end) * nx + i]) ++j_end;
      const int len = j_end - j;
      if (len >= options.nodal_min_chain) {
        int jumps = 0;
        for (int jj = j; jj < j_end; ++jj) {
          if (pi_jump(map.phase[g.index(i, jj)], map.phase[g.index(i + 1, jj)]))
            ++jumps;
        }
        if (2 * jumps >= len) {
          for (int jj = j; jj < j_end; ++jj)
            nodal[static_cast<size_t>(jj) * nx + i] = 1;
        }
      }
      j = j_end;
    }
  }
  // Horizontal chains.
  for (int j = 0; j < ny; ++j) {
    int i = 0;
    while (i < nx) {
      if (!low[static_cast<size_t>(j) * nx + i]) { ++i; continue; }
      int i_end = i;
      while (i_end < nx && low[static_cast<size_t>(j) * nx + i_end]) ++i_end;
      const int len = i_end - i;
      if (len >= options.nodal_min_chain) {
        int jumps = 0;
        for (int ii = i; ii < i_end; ++ii) {
          if (pi_jump(map.phase[g.index(ii, j)], map.phase[g.index(ii, j + 1)]))
            ++jumps;
        }
        if (2 * jumps >= len) {
          for (int ii = i; ii < i_end; ++ii)
            nodal[static_cast<size_t>(j) * nx + ii] = 1;
        }
      }
      i = i_end;
    }
  }

  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      if (!nodal[static_cast<size_t>(j) * nx + i]) continue;
      SingularityRecord rec;
      rec.i = i;
      rec.j = j;
      rec.px = center_x(i);
      rec.py = center_y(j);
      rec.winding = 0;
      rec.cls = SingularityClass::NodalLineSegment;
      rec.min_amplitude = corner_min(i, j);
      records.push_back(rec);
    }
  }
  return records;
}

}  // namespace pairprod
