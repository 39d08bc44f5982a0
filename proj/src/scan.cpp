#include "pairprod/scan.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pairprod/dhw.hpp"
#include "pairprod/spinorial.hpp"

namespace pairprod {

std::string method_name(Method m) {
  switch (m) {
    case Method::SMatrix: return "smatrix";
    case Method::DHW: return "dhw";
    case Method::Spinorial: return "spinorial";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "smatrix") return Method::SMatrix;
  if (name == "dhw") return Method::DHW;
  if (name == "spinorial") return Method::Spinorial;
  throw std::invalid_argument("run.method: unknown method '" + name + "'");
}

void MomentumGrid::validate() const {
  if (nx < 2 || ny < 2) throw std::invalid_argument("grid: counts must be >= 2");
  if (!(px_min < px_max)) throw std::invalid_argument("grid.px: need min < max");
  if (!(py_min < py_max)) throw std::invalid_argument("grid.py: need min < max");
}

namespace {

GridPoint evaluate_point(const Eigen::Vector3d& p, Method method, Variant variant,
                         const PulseConfig& pulse, const BispinorBasis& basis,
                         const SolverSpec& spec) {
  GridPoint out;
  switch (method) {
    case Method::SMatrix: {
      const PairAmplitudes amps = pair_distributions(p, variant, pulse, basis, spec);
      out.f_total = amps.f_total();
      out.has_amplitudes = true;
      out.amplitude = amps.amplitude;
      out.f = amps.f;
      out.n_tilde = amps.n_tilde;
      break;
    }
    case Method::DHW:
      out.f_total = dhw_distribution(p, variant, pulse, spec);
      break;
    case Method::Spinorial:
      out.f_total = spinorial_distribution(
          p, variant == Variant::Feynman ? Species::Electron : Species::Positron,
          pulse, spec);
      break;
  }
  return out;
}

}  // namespace

GridResult scan_grid(const MomentumGrid& grid, Method method, Variant variant,
                     const PulseConfig& pulse, const BispinorBasis& basis,
                     const SolverSpec& spec, int parallelism) {
  grid.validate();
  pulse.validate();
  basis.validate();
  spec.integ.validate();
  if (method == Method::Spinorial && !pulse.linear()) {
    throw UnsupportedPolarization();
  }

  // Freeze the window once so every point shares the exact same value.
  SolverSpec point_spec = spec;
  point_spec.window = spec.effective_window(pulse);

  GridResult result;
  result.grid = grid;
  result.method = method;
  result.variant = variant;
  result.points.resize(static_cast<size_t>(grid.size()));

  const auto t_start = std::chrono::steady_clock::now();

  int workers = parallelism > 0
                    ? parallelism
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, grid.ny));

  std::atomic<int> next_row{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::string error_location;

  const auto worker = [&]() {
    for (;;) {
      const int j = next_row.fetch_add(1);
      if (j >= grid.ny) return;
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error) return;
      }
      for (int i = 0; i < grid.nx; ++i) {
        try {
          result.points[grid.index(i, j)] =
              evaluate_point(grid.point(i, j), method, variant, pulse, basis,
                             point_spec);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) {
            first_error = std::current_exception();
            std::ostringstream loc;
            loc << "(" << grid.px(i) << ", " << grid.py(j) << ", " << grid.pz
                << ")";
            error_location = loc.str();
          }
          return;
        }
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (first_error) {
    try {
      std::rethrow_exception(first_error);
    } catch (const std::exception& e) {
      throw std::runtime_error("scan: at grid point " + error_location + ": " +
                               e.what());
    }
  }

  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return result;
}

DiffReport compare_grids(const GridResult& a, const GridResult& b) {
  if (a.grid.nx != b.grid.nx || a.grid.ny != b.grid.ny) {
    throw std::invalid_argument("compare: grids differ in shape");
  }
  DiffReport report;
  double scale = 0.0;
  for (size_t k = 0; k < a.points.size(); ++k) {
    scale = std::max({scale, std::abs(a.points[k].f_total),
                      std::abs(b.points[k].f_total)});
  }
  report.scale = std::max(scale, 1e-12);
  for (int j = 0; j < a.grid.ny; ++j) {
    for (int i = 0; i < a.grid.nx; ++i) {
      const int k = a.grid.index(i, j);
      const double diff =
          std::abs(a.points[k].f_total - b.points[k].f_total);
      if (diff > report.max_abs) {
        report.max_abs = diff;
        report.i_abs = i;
        report.j_abs = j;
      }
    }
  }
  report.max_rel = report.max_abs / report.scale;
  report.i_rel = report.i_abs;
  report.j_rel = report.j_abs;
  return report;
}

DiffReport compare_methods(const MomentumGrid& grid, Method method_a,
                           Method method_b, Variant variant,
                           const PulseConfig& pulse, const BispinorBasis& basis,
                           const SolverSpec& spec, int parallelism) {
  const GridResult a =
      scan_grid(grid, method_a, variant, pulse, basis, spec, parallelism);
  const GridResult b =
      scan_grid(grid, method_b, variant, pulse, basis, spec, parallelism);
  return compare_grids(a, b);
}

}  // namespace pairprod
