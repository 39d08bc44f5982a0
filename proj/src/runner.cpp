#include "pairprod/runner.hpp"

#include <fstream>
#include <sstream>

#include "pairprod/format.hpp"

namespace pairprod {

namespace {

// Every output starts with the command tag and the full effective
// configuration as '#' comments, so a file identifies its own run.
void write_header(std::ostream& os, const std::string& command,
                  const RunConfig& config) {
  os << "# pairprod " << command << "\n";
  std::istringstream cfg(serialize_config(config));
  std::string line;
  while (std::getline(cfg, line)) os << "# " << line << "\n";
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
  return os;
}

const char* spin_label(int idx) { return idx == 0 ? "+" : "-"; }

}  // namespace

void run_pulse(const RunConfig& config, const std::string& path) {
  const TimeWindow window = config.solver.effective_window(config.pulse);
  auto os = open_output(path);
  write_header(os, "pulse", config);
  os << "t,Ex,Ey,Ez,Ax,Ay,Az\n";
  for (int k = 0; k < config.samples; ++k) {
    const double t =
        window.t_i + (window.t_f - window.t_i) * k / (config.samples - 1);
    const Eigen::Vector3d e = eval_field(config.pulse, t);
    const Eigen::Vector3d a = eval_potential(config.pulse, t);
    os << fmt_double(t) << "," << fmt_double(e.x()) << "," << fmt_double(e.y())
       << "," << fmt_double(e.z()) << "," << fmt_double(a.x()) << ","
       << fmt_double(a.y()) << "," << fmt_double(a.z()) << "\n";
  }
}

void run_point(const RunConfig& config, const std::string& path) {
  const PairAmplitudes amps = pair_distributions(
      config.momentum, config.variant, config.pulse, config.basis, config.solver);
  auto os = open_output(path);
  write_header(os, "point", config);
  os << "q," << fmt_double(amps.momentum.x()) << ","
     << fmt_double(amps.momentum.y()) << "," << fmt_double(amps.momentum.z())
     << "\n";
  os << "variant," << (amps.variant == Variant::Feynman ? "feynman" : "antifeynman")
     << "\n";
  os << "basis,"
     << (config.basis.kind == BispinorBasis::Kind::Helicity ? "helicity" : "axis")
     << "\n";
  for (int c = 0; c < 2; ++c) {
    os << "N," << spin_label(c) << "," << fmt_double(amps.n_tilde[c]) << "\n";
  }
  for (int c = 0; c < 2; ++c) {
    for (int l = 0; l < 2; ++l) {
      os << "A," << spin_label(c) << "," << spin_label(l) << ","
         << fmt_double(amps.amplitude(c, l).real()) << ","
         << fmt_double(amps.amplitude(c, l).imag()) << "\n";
    }
  }
  for (int c = 0; c < 2; ++c) {
    for (int l = 0; l < 2; ++l) {
      os << "f," << spin_label(c) << "," << spin_label(l) << ","
         << fmt_double(amps.f(c, l)) << "\n";
    }
  }
  os << "f_total," << fmt_double(amps.f_total()) << "\n";
}

void run_scan(const RunConfig& config, const std::string& path) {
  const GridResult result =
      scan_grid(config.grid, config.method, config.variant, config.pulse,
                config.basis, config.solver, config.parallelism);
  auto os = open_output(path);
  write_header(os, "scan", config);
  const bool full = config.method == Method::SMatrix;
  if (full) {
    os << "px,py,pz,f_total,f_pp,f_pm,f_mp,f_mm,ReA_pp,ImA_pp,ReA_pm,ImA_pm,"
          "ReA_mp,ImA_mp,ReA_mm,ImA_mm,N_p,N_m\n";
  } else {
    os << "px,py,pz,f_total\n";
  }
  for (int j = 0; j < result.grid.ny; ++j) {
    for (int i = 0; i < result.grid.nx; ++i) {
      const GridPoint& pt = result.points[result.grid.index(i, j)];
      os << fmt_double(result.grid.px(i)) << "," << fmt_double(result.grid.py(j))
         << "," << fmt_double(result.grid.pz) << "," << fmt_double(pt.f_total);
      if (full) {
        for (int c = 0; c < 2; ++c)
          for (int l = 0; l < 2; ++l) os << "," << fmt_double(pt.f(c, l));
        for (int c = 0; c < 2; ++c)
          for (int l = 0; l < 2; ++l)
            os << "," << fmt_double(pt.amplitude(c, l).real()) << ","
               << fmt_double(pt.amplitude(c, l).imag());
        os << "," << fmt_double(pt.n_tilde[0]) << "," << fmt_double(pt.n_tilde[1]);
      }
      os << "\n";
    }
  }
}

DiffReport run_compare(const RunConfig& config, Method method_a, Method method_b,
                       const std::string& path) {
  const DiffReport report =
      compare_methods(config.grid, method_a, method_b, config.variant,
                      config.pulse, config.basis, config.solver,
                      config.parallelism);
  auto os = open_output(path);
  write_header(os, "compare", config);
  os << "method_a," << method_name(method_a) << "\n";
  os << "method_b," << method_name(method_b) << "\n";
  os << "max_abs," << fmt_double(report.max_abs) << "\n";
  os << "max_abs_at," << fmt_double(config.grid.px(report.i_abs)) << ","
     << fmt_double(config.grid.py(report.j_abs)) << ","
     << fmt_double(config.grid.pz) << "\n";
  os << "max_rel," << fmt_double(report.max_rel) << "\n";
  os << "max_rel_at," << fmt_double(config.grid.px(report.i_rel)) << ","
     << fmt_double(config.grid.py(report.j_rel)) << ","
     << fmt_double(config.grid.pz) << "\n";
  os << "scale," << fmt_double(report.scale) << "\n";
  os << "tolerance," << fmt_double(config.compare_tol) << "\n";
  os << "status," << (report.max_rel <= config.compare_tol ? "PASS" : "FAIL")
     << "\n";
  return report;
}

void run_phase(const RunConfig& config, const std::string& map_path,
               const std::string& singularity_path) {
  const GridResult scan =
      scan_grid(config.grid, Method::SMatrix, config.variant, config.pulse,
                config.basis, config.solver, config.parallelism);
  const TimeWindow window = config.solver.effective_window(config.pulse);
  const PhaseMap map =
      phase_map_from_scan(scan, config.cond, config.out_spin, config.eta, window);
  const WindingGrid windings = winding_numbers(map);
  ClassifyOptions options;
  options.exclude_origin = config.basis.kind == BispinorBasis::Kind::Helicity;
  const auto records = classify_singularities(map, windings, options);

  {
    auto os = open_output(map_path);
    write_header(os, "phase", config);
    os << "px,py,ReA,ImA,phase\n";
    for (int j = 0; j < map.grid.ny; ++j) {
      for (int i = 0; i < map.grid.nx; ++i) {
        const int k = map.grid.index(i, j);
        os << fmt_double(map.grid.px(i)) << "," << fmt_double(map.grid.py(j))
           << "," << fmt_double(map.amplitude[k].real()) << ","
           << fmt_double(map.amplitude[k].imag()) << ","
           << fmt_double(map.phase[k]) << "\n";
      }
    }
  }
  {
    auto os = open_output(singularity_path);
    write_header(os, "phase", config);
    os << "cell_i,cell_j,px,py,winding,class\n";
    for (const auto& rec : records) {
      os << fmt_int(rec.i) << "," << fmt_int(rec.j) << "," << fmt_double(rec.px)
         << "," << fmt_double(rec.py) << "," << fmt_int(rec.winding) << ","
         << singularity_class_name(rec.cls) << "\n";
    }
  }
}

std::string singularity_path_for(const std::string& map_path) {
  const auto dot = map_path.rfind('.');
  if (dot == std::string::npos || map_path.find('/', dot) != std::string::npos) {
    return map_path + "_singularities";
  }
  return map_path.substr(0, dot) + "_singularities" + map_path.substr(dot);
}

std::vector<std::string> run_command(const std::string& command,
                                     const RunConfig& config,
                                     const std::vector<std::string>& extra) {
  if (command == "pulse") {
    const std::string path = config.output.empty() ? "pulse.csv" : config.output;
    run_pulse(config, path);
    return {path};
  }
  if (command == "point") {
    const std::string path = config.output.empty() ? "point.txt" : config.output;
    run_point(config, path);
    return {path};
  }
  if (command == "scan") {
    const std::string path = config.output.empty() ? "scan.csv" : config.output;
    run_scan(config, path);
    return {path};
  }
  if (command == "compare") {
    if (extra.size() != 2) {
      throw std::invalid_argument("compare: expected two method names");
    }
    const std::string path = config.output.empty() ? "compare.txt" : config.output;
    run_compare(config, method_from_name(extra[0]), method_from_name(extra[1]),
                path);
    return {path};
  }
  if (command == "phase") {
    const std::string path = config.output.empty() ? "phase.csv" : config.output;
    const std::string sing = singularity_path_for(path);
    run_phase(config, path, sing);
    return {path, sing};
  }
  throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace pairprod
