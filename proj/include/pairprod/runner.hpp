#pragma once

#include <string>
#include <vector>

#include "pairprod/config.hpp"
#include "pairprod/vortex.hpp"

namespace pairprod {

/// Time series (t, E components, A components) over the integration window.
void run_pulse(const RunConfig& config, const std::string& path);

/// Verbose single-momentum smatrix record at config.momentum.
void run_point(const RunConfig& config, const std::string& path);

/// Grid CSV for the configured method/variant/basis.
void run_scan(const RunConfig& config, const std::string& path);

/// Cross-method difference report; returns the report for callers.
DiffReport run_compare(const RunConfig& config, Method method_a, Method method_b,
                       const std::string& path);

/// Phase-map CSV plus the singularity list CSV.
void run_phase(const RunConfig& config, const std::string& map_path,
               const std::string& singularity_path);

/// Derives the singularity file name from the phase-map name
/// ("phase.csv" -> "phase_singularities.csv").
std::string singularity_path_for(const std::string& map_path);

/// Dispatches one CLI command; `extra` carries the compare method names.
/// Returns the list of files written.
std::vector<std::string> run_command(const std::string& command,
                                     const RunConfig& config,
                                     const std::vector<std::string>& extra = {});

}  // namespace pairprod
