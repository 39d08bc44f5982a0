#pragma once

#include <string>

#include "pairprod/bispinor.hpp"
#include "pairprod/pulse.hpp"
#include "pairprod/scan.hpp"
#include "pairprod/solver.hpp"

namespace pairprod {

struct ConfigError : std::runtime_error {
  std::string key;
  ConfigError(std::string key_, const std::string& what_)
      : std::runtime_error(key_.empty() ? "config: " + what_
                                        : "config: " + key_ + ": " + what_),
        key(std::move(key_)) {}
};

/// Fully resolved run description parsed from the sectioned key = value file.
struct RunConfig {
  PulseConfig pulse;
  MomentumGrid grid;
  SolverSpec solver;
  double eta = 1.8;
  Method method = Method::SMatrix;
  Variant variant = Variant::Feynman;
  BispinorBasis basis;  // defaults to the z axis
  std::string output;   // empty: per-command default name
  int parallelism = 0;  // 0: all available cores
  Eigen::Vector3d momentum = Eigen::Vector3d::Zero();  // `point` command
  int samples = 2001;          // `pulse` command time samples
  double compare_tol = 1e-6;   // `compare` PASS threshold
  int cond = 0;                // `phase` conditioning spin index (0: +, 1: -)
  int out_spin = 1;            // `phase` outgoing spin index

  bool operator==(const RunConfig&) const;

  /// Cross-field validation (ranges, frames, method applicability).
  void validate() const;
};

/// Parses and validates the documented key = value format. Unknown sections
/// or keys are rejected naming the offending entry.
RunConfig parse_config(const std::string& text);

/// Applies one `section.key=value` override string.
void apply_override(RunConfig& config, const std::string& assignment);

/// Canonical serialization; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

}  // namespace pairprod
