#include "pairprod/config.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "pairprod/format.hpp"
#include "pairprod/spinorial.hpp"

namespace pairprod {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ConfigError(key, "invalid number '" + value + "'");
  }
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  int out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ConfigError(key, "invalid integer '" + value + "'");
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& value) {
  std::vector<std::string> parts;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  return parts;
}

Eigen::Vector3d parse_vec3(const std::string& key, const std::string& value) {
  const auto parts = split_commas(value);
  if (parts.size() != 3) throw ConfigError(key, "expected 'x,y,z'");
  return {parse_double(key, parts[0]), parse_double(key, parts[1]),
          parse_double(key, parts[2])};
}

void parse_axis(const std::string& key, const std::string& value, double& lo,
                double& hi, int& count) {
  const auto parts = split_commas(value);
  if (parts.size() != 3) throw ConfigError(key, "expected 'min,max,count'");
  lo = parse_double(key, parts[0]);
  hi = parse_double(key, parts[1]);
  count = parse_int(key, parts[2]);
}

int parse_spin(const std::string& key, const std::string& value) {
  if (value == "+") return 0;
  if (value == "-") return 1;
  throw ConfigError(key, "expected '+' or '-'");
}

std::string spin_name(int idx) { return idx == 0 ? "+" : "-"; }

std::string kind_name(PulseKind k) {
  switch (k) {
    case PulseKind::SauterLike: return "sauter";
    case PulseKind::Oscillating: return "oscillating";
    case PulseKind::Elliptic: return "elliptic";
  }
  return "?";
}

std::string variant_name(Variant v) {
  return v == Variant::Feynman ? "feynman" : "antifeynman";
}

std::string basis_name(const BispinorBasis& b) {
  if (b.kind == BispinorBasis::Kind::Helicity) return "helicity";
  if (b.axis == Eigen::Vector3d::UnitZ()) return "z";
  return "axis:" + fmt_double(b.axis.x()) + "," + fmt_double(b.axis.y()) + "," +
         fmt_double(b.axis.z());
}

void set_key(RunConfig& c, const std::string& section, const std::string& key,
             const std::string& value, std::set<std::string>& seen) {
  const std::string full = section + "." + key;
  seen.insert(full);
  if (section == "pulse") {
    if (key == "kind") {
      if (value == "sauter") c.pulse.kind = PulseKind::SauterLike;
      else if (value == "oscillating") c.pulse.kind = PulseKind::Oscillating;
      else if (value == "elliptic") c.pulse.kind = PulseKind::Elliptic;
      else throw ConfigError(full, "unknown pulse kind '" + value + "'");
    } else if (key == "E0") c.pulse.E0 = parse_double(full, value);
    else if (key == "tau0") c.pulse.tau0 = parse_double(full, value);
    else if (key == "t0") c.pulse.t0 = parse_double(full, value);
    else if (key == "sigma") c.pulse.sigma = parse_double(full, value);
    else if (key == "omega") c.pulse.omega = parse_double(full, value);
    else if (key == "chi") c.pulse.chi = parse_double(full, value);
    else if (key == "delta") c.pulse.delta = parse_double(full, value);
    else if (key == "eps1") c.pulse.eps1 = parse_vec3(full, value);
    else if (key == "eps2") c.pulse.eps2 = parse_vec3(full, value);
    else throw ConfigError(full, "unknown key");
  } else if (section == "grid") {
    if (key == "px") parse_axis(full, value, c.grid.px_min, c.grid.px_max, c.grid.nx);
    else if (key == "py") parse_axis(full, value, c.grid.py_min, c.grid.py_max, c.grid.ny);
    else if (key == "pz") c.grid.pz = parse_double(full, value);
    else throw ConfigError(full, "unknown key");
  } else if (section == "solver") {
    if (key == "rel_tol") c.solver.integ.rel_tol = parse_double(full, value);
    else if (key == "abs_tol") c.solver.integ.abs_tol = parse_double(full, value);
    else if (key == "max_step") c.solver.integ.max_step = parse_double(full, value);
    else if (key == "min_step") c.solver.integ.min_step = parse_double(full, value);
    else if (key == "t_i") {
      if (!c.solver.window) c.solver.window = TimeWindow{};
      c.solver.window->t_i = parse_double(full, value);
    } else if (key == "t_f") {
      if (!c.solver.window) c.solver.window = TimeWindow{};
      c.solver.window->t_f = parse_double(full, value);
    } else if (key == "eps_window") c.solver.eps_window = parse_double(full, value);
    else if (key == "eta") c.eta = parse_double(full, value);
    else throw ConfigError(full, "unknown key");
  } else if (section == "run") {
    if (key == "method") c.method = method_from_name(value);
    else if (key == "variant") {
      if (value == "feynman") c.variant = Variant::Feynman;
      else if (value == "antifeynman") c.variant = Variant::AntiFeynman;
      else throw ConfigError(full, "unknown variant '" + value + "'");
    } else if (key == "basis") {
      if (value == "z") c.basis = BispinorBasis::fixed_axis(Eigen::Vector3d::UnitZ());
      else if (value == "helicity") c.basis = BispinorBasis::helicity();
      else if (value.rfind("axis:", 0) == 0) {
        c.basis = BispinorBasis::fixed_axis(parse_vec3(full, value.substr(5)));
      } else throw ConfigError(full, "expected 'z', 'axis:x,y,z' or 'helicity'");
    } else if (key == "output") c.output = value;
    else if (key == "parallelism") c.parallelism = parse_int(full, value);
    else if (key == "momentum") c.momentum = parse_vec3(full, value);
    else if (key == "samples") c.samples = parse_int(full, value);
    else if (key == "compare_tol") c.compare_tol = parse_double(full, value);
    else if (key == "cond") c.cond = parse_spin(full, value);
    else if (key == "out") c.out_spin = parse_spin(full, value);
    else throw ConfigError(full, "unknown key");
  } else {
    throw ConfigError(section, "unknown section");
  }
}

}  // namespace

bool RunConfig::operator==(const RunConfig& o) const {
  const auto win_eq = [&] {
    if (solver.window.has_value() != o.solver.window.has_value()) return false;
    if (!solver.window) return true;
    return solver.window->t_i == o.solver.window->t_i &&
           solver.window->t_f == o.solver.window->t_f;
  };
  return pulse.kind == o.pulse.kind && pulse.E0 == o.pulse.E0 &&
         pulse.tau0 == o.pulse.tau0 && pulse.t0 == o.pulse.t0 &&
         pulse.sigma == o.pulse.sigma && pulse.omega == o.pulse.omega &&
         pulse.chi == o.pulse.chi && pulse.delta == o.pulse.delta &&
         pulse.eps1 == o.pulse.eps1 && pulse.eps2 == o.pulse.eps2 &&
         grid.px_min == o.grid.px_min && grid.px_max == o.grid.px_max &&
         grid.nx == o.grid.nx && grid.py_min == o.grid.py_min &&
         grid.py_max == o.grid.py_max && grid.ny == o.grid.ny &&
         grid.pz == o.grid.pz && solver.integ.rel_tol == o.solver.integ.rel_tol &&
         solver.integ.abs_tol == o.solver.integ.abs_tol &&
         solver.integ.max_step == o.solver.integ.max_step &&
         solver.integ.min_step == o.solver.integ.min_step && win_eq() &&
         solver.eps_window == o.solver.eps_window && eta == o.eta &&
         method == o.method && variant == o.variant &&
         basis.kind == o.basis.kind && basis.axis == o.basis.axis &&
         output == o.output && parallelism == o.parallelism &&
         momentum == o.momentum && samples == o.samples &&
         compare_tol == o.compare_tol && cond == o.cond && out_spin == o.out_spin;
}

void RunConfig::validate() const {
  try {
    pulse.validate();
    grid.validate();
    solver.integ.validate();
    basis.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("", e.what());
  }
  if (!(solver.eps_window > 0.0 && solver.eps_window < 1.0)) {
    throw ConfigError("solver.eps_window", "must lie in (0, 1)");
  }
  if (solver.window && !(solver.window->t_i < solver.window->t_f)) {
    throw ConfigError("solver.t_i", "explicit window needs t_i < t_f");
  }
  if (samples < 2) throw ConfigError("run.samples", "must be >= 2");
  if (parallelism < 0) throw ConfigError("run.parallelism", "must be >= 0");
  if (!(compare_tol > 0.0)) throw ConfigError("run.compare_tol", "must be > 0");
  if (!std::isfinite(eta)) throw ConfigError("solver.eta", "must be finite");
  // Method applicability is part of validation so misconfigured runs fail
  // before any integration starts.
  if (method == Method::Spinorial && !pulse.linear()) {
    throw UnsupportedPolarization();
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  std::set<std::string> seen;
  std::string section;
  std::istringstream stream(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(stream, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(lineno), "malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno), "expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) {
      throw ConfigError(key, "key outside of any [section]");
    }
    set_key(config, section, key, value, seen);
  }
  if (!seen.count("pulse.kind")) throw ConfigError("pulse.kind", "missing required key");
  if (!seen.count("pulse.E0")) throw ConfigError("pulse.E0", "missing required key");
  if (seen.count("solver.t_i") != seen.count("solver.t_f")) {
    throw ConfigError("solver.t_i", "explicit window needs both t_i and t_f");
  }
  config.validate();
  return config;
}

void apply_override(RunConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw ConfigError(assignment, "override must look like section.key=value");
  }
  const std::string path = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  const auto dot = path.find('.');
  if (dot == std::string::npos) {
    throw ConfigError(path, "override key needs a section prefix");
  }
  std::set<std::string> seen;
  set_key(config, path.substr(0, dot), path.substr(dot + 1), value, seen);
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  out << "[pulse]\n";
  out << "kind = " << kind_name(c.pulse.kind) << "\n";
  out << "E0 = " << fmt_double(c.pulse.E0) << "\n";
  out << "tau0 = " << fmt_double(c.pulse.tau0) << "\n";
  out << "t0 = " << fmt_double(c.pulse.t0) << "\n";
  out << "sigma = " << fmt_double(c.pulse.sigma) << "\n";
  out << "omega = " << fmt_double(c.pulse.omega) << "\n";
  out << "chi = " << fmt_double(c.pulse.chi) << "\n";
  out << "delta = " << fmt_double(c.pulse.delta) << "\n";
  out << "eps1 = " << fmt_double(c.pulse.eps1.x()) << "," << fmt_double(c.pulse.eps1.y())
      << "," << fmt_double(c.pulse.eps1.z()) << "\n";
  out << "eps2 = " << fmt_double(c.pulse.eps2.x()) << "," << fmt_double(c.pulse.eps2.y())
      << "," << fmt_double(c.pulse.eps2.z()) << "\n";
  out << "[grid]\n";
  out << "px = " << fmt_double(c.grid.px_min) << "," << fmt_double(c.grid.px_max) << ","
      << fmt_int(c.grid.nx) << "\n";
  out << "py = " << fmt_double(c.grid.py_min) << "," << fmt_double(c.grid.py_max) << ","
      << fmt_int(c.grid.ny) << "\n";
  out << "pz = " << fmt_double(c.grid.pz) << "\n";
  out << "[solver]\n";
  out << "rel_tol = " << fmt_double(c.solver.integ.rel_tol) << "\n";
  out << "abs_tol = " << fmt_double(c.solver.integ.abs_tol) << "\n";
  out << "max_step = " << fmt_double(c.solver.integ.max_step) << "\n";
  out << "min_step = " << fmt_double(c.solver.integ.min_step) << "\n";
  if (c.solver.window) {
    out << "t_i = " << fmt_double(c.solver.window->t_i) << "\n";
    out << "t_f = " << fmt_double(c.solver.window->t_f) << "\n";
  }
  out << "eps_window = " << fmt_double(c.solver.eps_window) << "\n";
  out << "eta = " << fmt_double(c.eta) << "\n";
  out << "[run]\n";
  out << "method = " << method_name(c.method) << "\n";
  out << "variant = " << variant_name(c.variant) << "\n";
  out << "basis = " << basis_name(c.basis) << "\n";
  if (!c.output.empty()) out << "output = " << c.output << "\n";
  out << "parallelism = " << fmt_int(c.parallelism) << "\n";
  out << "momentum = " << fmt_double(c.momentum.x()) << "," << fmt_double(c.momentum.y())
      << "," << fmt_double(c.momentum.z()) << "\n";
  out << "samples = " << fmt_int(c.samples) << "\n";
  out << "compare_tol = " << fmt_double(c.compare_tol) << "\n";
  out << "cond = " << spin_name(c.cond) << "\n";
  out << "out = " << spin_name(c.out_spin) << "\n";
  return out.str();
}

}  // namespace pairprod
