#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "pairprod/odeint.hpp"
#include "pairprod/pulse.hpp"

namespace pairprod {

enum class Variant { Feynman, AntiFeynman };

/// Integration setup shared by the three backends: tolerances plus the time
/// window, either explicit or derived from the pulse support.
struct SolverSpec {
  IntegratorSpec integ;
  std::optional<TimeWindow> window;
  double eps_window = 1e-9;

  TimeWindow effective_window(const PulseConfig& pulse) const {
    if (window) return *window;
    return integration_window(pulse, eps_window);
  }
};

/// Cap on the step size so the interaction-picture phases exp(+-2i p0 t)
/// stay resolved.
inline double phase_resolving_max_step(double p0, double max_step) {
  return std::min(max_step, 0.1 * 2.0 * M_PI / (2.0 * p0));
}

}  // namespace pairprod
